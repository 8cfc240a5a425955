#include "hubsolve/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <map>
#include <set>

#include "hubsolve/errors.hpp"
#include "hubsolve/wildcard_csp.hpp"

namespace hubsolve {

// --- witness checks --------------------------------------------------------

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment) {
    for (auto [u, v] : g.edges())
        if (assignment[u] != 0 && assignment[u] == assignment[v]) return false;
    return true;
}

bool respects_lists(const ListAssignment& l, const std::vector<int>& assignment) {
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] != 0 && !l.allows(static_cast<int>(v), assignment[v])) return false;
    return true;
}

bool verify_vd_solution(const Graph& g, const ListAssignment& l, const ColoringSolution& s) {
    if (s.cost != static_cast<long long>(s.deleted_vertices.size())) return false;
    std::vector<char> deleted(g.n(), 0);
    for (int v : s.deleted_vertices) {
        if (v < 0 || v >= g.n() || deleted[v]) return false;
        deleted[v] = 1;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (deleted[v] != (s.assignment[v] == 0)) return false;
        if (!deleted[v] && !l.allows(v, s.assignment[v])) return false;
    }
    return is_proper_coloring(g, s.assignment);
}

bool verify_ed_solution(const Graph& g, int q, const ColoringSolution& s) {
    if (s.cost != static_cast<long long>(s.deleted_edges.size())) return false;
    std::set<std::pair<int, int>> del(s.deleted_edges.begin(), s.deleted_edges.end());
    for (auto e : del)
        if (!g.has_edge(e.first, e.second)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (s.assignment[v] < 1 || s.assignment[v] > q) return false;
    for (auto [u, v] : g.edges()) {
        if (s.assignment[u] != s.assignment[v]) continue;
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!del.count(key)) return false;
    }
    return true;
}

// --- shared helpers ---------------------------------------------------------

namespace {

// proper extension of the current assignment to comp; colors only, lists
// respected, neighbours already assigned are honored
bool extend_component(const Graph& g, const ListAssignment& l, const std::vector<int>& comp,
                      std::vector<int>& assignment, std::size_t at) {
    if (at == comp.size()) return true;
    const int v = comp[at];
    for (int c : l.lists[v]) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (assignment[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        assignment[v] = c;
        if (extend_component(g, l, comp, assignment, at + 1)) return true;
        assignment[v] = 0;
    }
    return false;
}

// min vertex deletions inside comp; fills best assignment (0 = deleted)
int best_vd_extension(const Graph& g, const ListAssignment& l, const std::vector<int>& comp,
                      std::vector<int>& assignment, std::size_t at, int used, int& best,
                      std::vector<int>* best_out) {
    if (used >= best) return best;
    if (at == comp.size()) {
        best = used;
        if (best_out)
            for (int v : comp) (*best_out)[v] = assignment[v];
        return best;
    }
    const int v = comp[at];
    for (int c : l.lists[v]) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (assignment[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        assignment[v] = c;
        best_vd_extension(g, l, comp, assignment, at + 1, used, best, best_out);
        assignment[v] = -1;
    }
    assignment[v] = 0;
    best_vd_extension(g, l, comp, assignment, at + 1, used + 1, best, best_out);
    assignment[v] = -1;
    return best;
}

// min improper edges incident to comp, given the boundary coloring; counts
// edges inside comp and comp-to-hub edges, never hub-internal ones
int best_ed_extension(const Graph& g, int q, const std::vector<int>& comp,
                      std::vector<int>& assignment, std::size_t at, int acc, int& best,
                      std::vector<int>* best_out) {
    if (acc >= best) return best;
    if (at == comp.size()) {
        best = acc;
        if (best_out)
            for (int v : comp) (*best_out)[v] = assignment[v];
        return best;
    }
    const int v = comp[at];
    for (int c = 1; c <= q; ++c) {
        int add = 0;
        for (int w : g.neighbors(v))
            if (assignment[w] == c) ++add;
        assignment[v] = c;
        best_ed_extension(g, q, comp, assignment, at + 1, acc + add, best, best_out);
        assignment[v] = 0;
    }
    return best;
}

std::uint64_t boundary_key(const std::vector<int>& nbhd, const std::vector<int>& assignment,
                           int radix) {
    std::uint64_t key = 0;
    for (int x : nbhd) key = key * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(assignment[x]);
    return key;
}

}  // namespace

// --- q-Coloring --------------------------------------------------------------

std::optional<ColoringSolution> solve_coloring(const Graph& g, const HubDecomposition& h,
                                               int q) {
    if (q < 1) throw validation_error("q must be positive");
    const ListAssignment full = ListAssignment::full(g.n(), q);
    const int p = h.p();
    std::vector<int> assignment(g.n(), 0);
    // memo: per component, boundary coloring -> extendable
    std::vector<std::map<std::uint64_t, bool>> memo(h.components.size());

    std::vector<int> order = h.hub;
    std::vector<int> choice(p, 0);
    int at = 0;
    while (at >= 0) {
        if (at == p) {
            bool ok = true;
            for (std::size_t ci = 0; ci < h.components.size() && ok; ++ci) {
                auto key = boundary_key(h.neighborhoods[ci], assignment, q + 1);
                auto it = memo[ci].find(key);
                bool ext;
                if (it != memo[ci].end()) {
            	    ext = it->second;
                } else {
                    ext = extend_component(g, full, h.components[ci], assignment, 0);
                    if (!ext)
                        for (int v : h.components[ci]) assignment[v] = 0;
                    memo[ci][key] = ext;
                }
                ok = ext;
            }
            if (ok) {
                // memo hits may have left components uncolored; redo extensions
                for (std::size_t ci = 0; ci < h.components.size(); ++ci)
                    if (!h.components[ci].empty() && assignment[h.components[ci][0]] == 0) {
                        bool ext = extend_component(g, full, h.components[ci], assignment, 0);
                        assert(ext);
                        (void)ext;
                    }
                ColoringSolution s;
                s.assignment = assignment;
                s.cost = 0;
                assert(is_proper_coloring(g, s.assignment));
                return s;
            }
            for (const auto& comp : h.components)
                for (int v : comp) assignment[v] = 0;
            --at;
            continue;
        }
        const int v = order[at];
        bool advanced = false;
        for (int c = choice[at] + 1; c <= q; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (assignment[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                choice[at] = c;
                assignment[v] = c;
                ++at;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            choice[at] = 0;
            assignment[v] = 0;
            --at;
        }
    }
    return std::nullopt;
}

// --- List q-Coloring ----------------------------------------------------------

namespace {

struct ListColoringSolver {
    const Graph& g;
    const HubDecomposition& h;
    const int q;
    long long leaves = 0;
    std::vector<int> result;

    ListColoringSolver(const Graph& g_, const HubDecomposition& h_, int q_)
        : g(g_), h(h_), q(q_), result(g_.n(), 0) {}

    struct State {
        std::vector<int> live_hub;    // sorted
        std::vector<int> live_comps;  // indices into h.components, stored order
        std::vector<std::vector<int>> lists;
        std::vector<int> assignment;  // 0 = unassigned
    };

    std::vector<int> live_gamma(const State& st, int ci) const {
        std::vector<int> out;
        for (int x : h.neighborhoods[ci])
            if (std::binary_search(st.live_hub.begin(), st.live_hub.end(), x)) out.push_back(x);
        return out;
    }

    bool component_extends(const State& st, int ci, std::vector<int>& assignment) const {
        ListAssignment la;
        la.q = q;
        la.lists = st.lists;
        return extend_component(g, la, h.components[ci], assignment, 0);
    }

    // enumerate list-respecting colorings of `verts`, proper against every
    // already-assigned neighbor, in lexicographic order; stops when fn()
    // returns true
    template <typename Fn>
    bool for_each_coloring(const State& st, const std::vector<int>& verts,
                           std::vector<int>& assignment, std::size_t at, Fn&& fn) const {
        if (at == verts.size()) return fn();
        const int v = verts[at];
        for (int c : st.lists[v]) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (assignment[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assignment[v] = c;
            if (for_each_coloring(st, verts, assignment, at + 1, fn)) return true;
            assignment[v] = 0;
        }
        return false;
    }

    bool base_case(State& st) {
        auto hub_done = [&]() {
            std::vector<int> trial = st.assignment;
            for (int ci : st.live_comps)
                if (!component_extends(st, ci, trial)) return false;
            st.assignment = trial;
            return true;
        };
        return for_each_coloring(st, st.live_hub, st.assignment, 0, hub_done);
    }

    bool solve(State st) {
        while (true) {
            for (int v : st.live_hub)
                if (st.lists[v].empty()) {
                    ++leaves;
                    return false;
                }
            for (int ci : st.live_comps)
                for (int v : h.components[ci])
                    if (st.lists[v].empty()) {
                        ++leaves;
                        return false;
                    }

            // components with no live hub neighbor are solved locally
            bool changed = false;
            for (std::size_t k = 0; k < st.live_comps.size(); ++k) {
                const int ci = st.live_comps[k];
                if (!live_gamma(st, ci).empty()) continue;
                if (!component_extends(st, ci, st.assignment)) {
                    ++leaves;
                    return false;
                }
                st.live_comps.erase(st.live_comps.begin() + static_cast<long>(k));
                changed = true;
                break;
            }
            if (changed) continue;

            if (static_cast<int>(st.live_hub.size()) <= 2 * h.delta || st.live_comps.empty()) {
                ++leaves;
                if (base_case(st)) {
                    result = st.assignment;
                    return true;
                }
                return false;
            }

            // branch on the first live component
            const int ci = st.live_comps.front();
            const auto gamma = live_gamma(st, ci);
            const int r = static_cast<int>(gamma.size());

            std::vector<std::vector<int>> extendable;
            for_each_coloring(st, gamma, st.assignment, 0, [&]() {
                std::vector<int> trial = st.assignment;
                if (component_extends(st, ci, trial)) {
                    std::vector<int> phi(gamma.size());
                    for (std::size_t i = 0; i < gamma.size(); ++i)
                        phi[i] = st.assignment[gamma[i]];
                    extendable.push_back(std::move(phi));
                }
                return false;  // keep enumerating
            });
            for (int x : gamma) st.assignment[x] = 0;

            long long all = 1;
            for (int i = 0; i < r; ++i) all *= q;
            if (static_cast<long long>(extendable.size()) == all) {
                // every boundary coloring extends: the component is free
                st.live_comps.erase(st.live_comps.begin());
                continue;
            }
            if (extendable.empty()) {
                ++leaves;
                return false;
            }

            for (const auto& phi : extendable) {
                State child = st;
                for (std::size_t i = 0; i < gamma.size(); ++i) {
                    const int x = gamma[i];
                    child.assignment[x] = phi[i];
                    for (int w : g.neighbors(x)) {
                        auto& lst = child.lists[w];
                        lst.erase(std::remove(lst.begin(), lst.end(), phi[i]), lst.end());
                    }
                }
                child.live_hub.erase(
                    std::remove_if(child.live_hub.begin(), child.live_hub.end(),
                                   [&](int x) {
                                       return std::find(gamma.begin(), gamma.end(), x) !=
                                              gamma.end();
                                   }),
                    child.live_hub.end());
                child.live_comps.erase(child.live_comps.begin());
                // coloring Gamma(A) covers A as well: fix its witness now
                if (!component_extends(child, ci, child.assignment)) continue;
                if (solve(std::move(child))) return true;
            }
            return false;
        }
    }
};

}  // namespace

std::optional<ColoringSolution> solve_list_coloring(const Graph& g, const ListAssignment& l,
                                                    const HubDecomposition& h,
                                                    SolveStats* stats) {
    ListColoringSolver solver(g, h, l.q);
    ListColoringSolver::State st;
    st.live_hub = h.hub;
    st.live_comps.resize(h.components.size());
    for (std::size_t i = 0; i < h.components.size(); ++i) st.live_comps[i] = static_cast<int>(i);
    st.lists = l.lists;
    st.assignment.assign(g.n(), 0);

    bool found = solver.solve(std::move(st));
    if (stats) stats->leaves = solver.leaves;
    if (!found) return std::nullopt;

    ColoringSolution s;
    s.assignment = solver.result;
    s.cost = 0;
    if (!is_proper_coloring(g, s.assignment) || !respects_lists(l, s.assignment))
        throw std::logic_error("list-coloring witness failed verification");
    return s;
}

// --- Vertex deletion ----------------------------------------------------------

ColoringSolution solve_coloring_vd(const Graph& g, const ListAssignment& l,
                                   const HubDecomposition& h) {
    const int q = l.q;
    const int p = h.p();
    const int radix = q + 2;  // boundary values 0..q plus "unknown" never keyed

    std::vector<int> assignment(g.n(), -1);
    std::vector<std::map<std::uint64_t, int>> memo(h.components.size());

    long long best_cost = -1;
    std::vector<int> best_assignment;

    // hub states: value q means delete, otherwise color index into [q]
    std::vector<int> state(p, -1);
    std::vector<int> best_comp(g.n(), -1);

    auto eval_components = [&]() -> long long {
        long long total = 0;
        for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
            auto key = boundary_key(h.neighborhoods[ci], assignment, radix);
            auto it = memo[ci].find(key);
            int c;
            if (it != memo[ci].end()) {
                c = it->second;
            } else {
                int bound = static_cast<int>(h.components[ci].size()) + 1;
                c = best_vd_extension(g, l, h.components[ci], assignment, 0, 0, bound, nullptr);
                memo[ci][key] = c;
            }
            total += c;
        }
        return total;
    };

    // DFS over hub states with properness pruning inside the hub
    std::vector<int> hub = h.hub;
    std::vector<int> cursor(p, -1);
    int at = 0;
    if (p == 0) {
        for (int v = 0; v < g.n(); ++v) assignment[v] = -1;
        long long total = eval_components();
        best_cost = total;
    }
    while (p > 0 && at >= 0) {
        if (at == p) {
            long long hub_del = 0;
            for (int i = 0; i < p; ++i)
                if (assignment[hub[i]] == 0) ++hub_del;
            long long total = hub_del + eval_components();
            if (best_cost < 0 || total < best_cost) {
                best_cost = total;
                best_assignment.assign(g.n(), 0);
                for (int i = 0; i < p; ++i) best_assignment[hub[i]] = assignment[hub[i]];
                // rebuild component argmins for the witness
                for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
                    int bound = static_cast<int>(h.components[ci].size()) + 1;
                    std::vector<int> tmp = assignment;
                    best_vd_extension(g, l, h.components[ci], tmp, 0, 0, bound, &best_comp);
                    for (int v : h.components[ci]) best_assignment[v] = best_comp[v];
                }
            }
            --at;
            continue;
        }
        const int v = hub[at];
        bool advanced = false;
        for (int next = cursor[at] + 1; next <= q; ++next) {
            if (next < q) {
                // color choice: 0-based index into the color set [q]
                int color = next + 1;
                if (!l.allows(v, color)) continue;
                bool ok = true;
                for (int w : g.neighbors(v))
                    if (assignment[w] == color) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                cursor[at] = next;
                assignment[v] = color;
                ++at;
                advanced = true;
                break;
            } else {
                // deletion
                cursor[at] = next;
                assignment[v] = 0;
                ++at;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            cursor[at] = -1;
            assignment[v] = -1;
            --at;
        }
    }

    ColoringSolution s;
    s.cost = best_cost;
    if (p == 0) {
        s.assignment.assign(g.n(), 0);
        std::vector<int> tmp(g.n(), -1);
        for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
            int bound = static_cast<int>(h.components[ci].size()) + 1;
            best_vd_extension(g, l, h.components[ci], tmp, 0, 0, bound, &best_comp);
            for (int v : h.components[ci]) s.assignment[v] = best_comp[v];
        }
    } else {
        s.assignment = best_assignment;
    }
    for (int v = 0; v < g.n(); ++v)
        if (s.assignment[v] == 0) s.deleted_vertices.push_back(v);
    if (!verify_vd_solution(g, l, s)) throw std::logic_error("vd witness failed verification");
    return s;
}

ColoringSolution solve_coloring_vd_fast(const Graph& g, const ListAssignment& l,
                                        const HubDecomposition& h, SolveStats* stats) {
    // preprocessing: hub vertices with empty lists are forced deletions
    std::vector<int> forced, active_hub;
    for (int v : h.hub)
        (l.lists[v].empty() ? forced : active_hub).push_back(v);

    HubDecomposition hh = h;
    hh.hub = active_hub;
    if (!forced.empty()) {
        // neighborhoods shrink to the surviving hub
        for (auto& nb : hh.neighborhoods) {
            nb.erase(std::remove_if(nb.begin(), nb.end(),
                                    [&](int x) {
                                        return !std::binary_search(active_hub.begin(),
                                                                   active_hub.end(), x);
                                    }),
                     nb.end());
        }
    }

    WildcardCsp csp = vd_to_wildcard_csp(g, l, hh);
    WildcardResult res = solve_wildcard(csp, stats);

    ColoringSolution s;
    s.cost = res.cost + static_cast<long long>(forced.size());
    s.assignment.assign(g.n(), 0);
    std::vector<int> assignment(g.n(), -1);
    for (int v : forced) assignment[v] = 0;
    for (std::size_t i = 0; i < hh.hub.size(); ++i) {
        const int v = hh.hub[i];
        const int val = res.assignment.values[i];
        if (val == l.q) {
            assignment[v] = 0;
        } else {
            const auto& lst = l.lists[v];
            assignment[v] = lst[static_cast<std::size_t>(val) % lst.size()];
        }
    }
    std::vector<int> comp_best(g.n(), -1);
    for (std::size_t ci = 0; ci < hh.components.size(); ++ci) {
        int bound = static_cast<int>(hh.components[ci].size()) + 1;
        best_vd_extension(g, l, hh.components[ci], assignment, 0, 0, bound, &comp_best);
        for (int v : hh.components[ci]) assignment[v] = comp_best[v];
    }
    for (int v = 0; v < g.n(); ++v) s.assignment[v] = std::max(assignment[v], 0);
    for (int v = 0; v < g.n(); ++v)
        if (s.assignment[v] == 0) s.deleted_vertices.push_back(v);
    if (!verify_vd_solution(g, l, s)) throw std::logic_error("vd witness failed verification");
    return s;
}

// --- Edge deletion -------------------------------------------------------------

ColoringSolution solve_coloring_ed(const Graph& g, const HubDecomposition& h, int q) {
    if (q < 2) throw validation_error("edge deletion needs q >= 2");
    const int p = h.p();
    std::vector<int> assignment(g.n(), 0);
    std::vector<std::map<std::uint64_t, int>> memo(h.components.size());

    // hub-internal edges, counted once globally
    std::vector<std::pair<int, int>> hub_edges;
    {
        std::vector<char> in_hub(g.n(), 0);
        for (int v : h.hub) in_hub[v] = 1;
        for (auto [u, v] : g.edges())
            if (in_hub[u] && in_hub[v]) hub_edges.emplace_back(u, v);
    }

    long long best_cost = -1;
    std::vector<int> best_hub;

    std::vector<int> hub = h.hub;
    std::vector<int> counter(p, 1);
    bool done = false;
    while (!done) {
        for (int i = 0; i < p; ++i) assignment[hub[i]] = counter[i];
        long long cost = 0;
        for (auto [u, v] : hub_edges)
            if (assignment[u] == assignment[v]) ++cost;
        for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
            auto key = boundary_key(h.neighborhoods[ci], assignment, q + 1);
            auto it = memo[ci].find(key);
            int c;
            if (it != memo[ci].end()) {
                c = it->second;
            } else {
                int bound = g.m() + 1;
                c = best_ed_extension(g, q, h.components[ci], assignment, 0, 0, bound, nullptr);
                memo[ci][key] = c;
            }
            cost += c;
        }
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_hub = counter;
        }
        // next hub coloring
        int i = 0;
        for (; i < p; ++i) {
            if (counter[i] < q) {
                ++counter[i];
                break;
            }
            counter[i] = 1;
        }
        if (i == p) done = true;
        if (p == 0) done = true;
    }

    // rebuild the witness for the best hub coloring
    ColoringSolution s;
    s.cost = best_cost < 0 ? 0 : best_cost;
    s.assignment.assign(g.n(), 0);
    for (int v : h.hub) assignment[v] = 0;
    for (int i = 0; i < p; ++i) s.assignment[hub[i]] = best_hub[i];
    std::vector<int> tmp = s.assignment;
    std::vector<int> comp_best(g.n(), 0);
    for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
        int bound = g.m() + 1;
        best_ed_extension(g, q, h.components[ci], tmp, 0, 0, bound, &comp_best);
        for (int v : h.components[ci]) {
            s.assignment[v] = comp_best[v];
            tmp[v] = 0;
        }
    }
    for (auto [u, v] : g.edges())
        if (s.assignment[u] == s.assignment[v]) s.deleted_edges.emplace_back(u, v);
    s.cost = static_cast<long long>(s.deleted_edges.size());
    if ((best_cost >= 0 && s.cost != best_cost) || !verify_ed_solution(g, q, s))
        throw std::logic_error("ed witness failed verification");
    return s;
}

// --- oracles ----------------------------------------------------------------

std::optional<ColoringSolution> oracle_coloring(const Graph& g, int q) {
    if (g.n() > kOracleColoringCap)
        throw cap_error("InstanceTooLarge: oracle_coloring supports n <= 12");
    return oracle_list_coloring(g, ListAssignment::full(g.n(), q));
}

std::optional<ColoringSolution> oracle_list_coloring(const Graph& g, const ListAssignment& l) {
    if (g.n() > kOracleColoringCap)
        throw cap_error("InstanceTooLarge: oracle_list_coloring supports n <= 12");
    std::vector<int> verts(g.n());
    for (int i = 0; i < g.n(); ++i) verts[i] = i;
    std::vector<int> assignment(g.n(), 0);
    if (!extend_component(g, l, verts, assignment, 0)) return std::nullopt;
    ColoringSolution s;
    s.assignment = assignment;
    s.cost = 0;
    return s;
}

ColoringSolution oracle_vd(const Graph& g, const ListAssignment& l) {
    if (g.n() > kOracleColoringCap)
        throw cap_error("InstanceTooLarge: oracle_vd supports n <= 12");
    std::vector<int> verts(g.n());
    for (int i = 0; i < g.n(); ++i) verts[i] = i;
    std::vector<int> assignment(g.n(), -1), best_out(g.n(), -1);
    int best = g.n() + 1;
    best_vd_extension(g, l, verts, assignment, 0, 0, best, &best_out);
    ColoringSolution s;
    s.assignment.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) s.assignment[v] = std::max(best_out[v], 0);
    for (int v = 0; v < g.n(); ++v)
        if (s.assignment[v] == 0) s.deleted_vertices.push_back(v);
    s.cost = static_cast<long long>(s.deleted_vertices.size());
    assert(verify_vd_solution(g, l, s));
    return s;
}

ColoringSolution oracle_ed(const Graph& g, int q) {
    if (g.n() > kOracleColoringCap)
        throw cap_error("InstanceTooLarge: oracle_ed supports n <= 12");
    std::vector<int> verts(g.n());
    for (int i = 0; i < g.n(); ++i) verts[i] = i;
    std::vector<int> assignment(g.n(), 0), best_out(g.n(), 0);
    int best = g.m() + 1;
    best_ed_extension(g, q, verts, assignment, 0, 0, best, &best_out);
    ColoringSolution s;
    s.assignment = best_out;
    for (auto [u, v] : g.edges())
        if (s.assignment[u] == s.assignment[v]) s.deleted_edges.emplace_back(u, v);
    s.cost = static_cast<long long>(s.deleted_edges.size());
    assert(verify_ed_solution(g, q, s));
    return s;
}

}  // namespace hubsolve
