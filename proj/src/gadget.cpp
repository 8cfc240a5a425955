#include "hubsolve/gadget.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hubsolve/errors.hpp"

namespace hubsolve {

bool Relation::contains(const std::vector<int>& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

Relation Relation::full(int q, int r) {
    Relation rel;
    rel.q = q;
    rel.r = r;
    std::vector<int> t(r, 1);
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = r - 1; i >= 0; --i) {
            t[i] = static_cast<int>(x % q) + 1;
            x /= q;
        }
        rel.tuples.push_back(t);
    }
    std::sort(rel.tuples.begin(), rel.tuples.end());
    return rel;
}

long long Relation::tuple_space() const {
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    return total;
}

// --- exact min-sum elimination engine ------------------------------------------

namespace {

struct Factor {
    std::vector<int> scope;        // vertex ids, ascending
    std::vector<long long> table;  // product of domain sizes, scope[0] least significant
};

struct EliminationResult {
    bool infeasible = false;        // some domain is empty
    long long base = 0;             // folded constant
    std::vector<Factor> factors;    // residual factors over kept vertices
};

// exact min-sum elimination of every vertex outside `keep`; the improper
// edge count decomposes as base plus the residual factors over `keep`
EliminationResult eliminate_keep(const Graph& g, const std::vector<std::vector<int>>& domains,
                                 const std::vector<int>& keep) {
    const int n = g.n();
    EliminationResult out;

    for (const auto& dom : domains)
        if (dom.empty()) {
            out.infeasible = true;
            return out;
        }

    std::vector<char> kept(n, 0);
    for (int v : keep) kept[v] = 1;
    std::vector<char> fixed(n, 0);
    for (int v = 0; v < n; ++v) fixed[v] = !kept[v] && domains[v].size() == 1;

    std::vector<Factor> factors;
    std::vector<std::set<int>> incident(n);

    auto add_factor = [&](Factor f) {
        if (f.scope.empty()) {
            out.base += f.table[0];
            return;
        }
        bool all_kept = true;
        for (int v : f.scope) all_kept &= static_cast<bool>(kept[v]);
        if (all_kept) {
            out.factors.push_back(std::move(f));
            return;
        }
        const int id = static_cast<int>(factors.size());
        for (int v : f.scope)
            if (!kept[v]) incident[v].insert(id);
        factors.push_back(std::move(f));
    };

    // seed factors from edges, folding fixed endpoints
    for (auto [u, v] : g.edges()) {
        if (fixed[u] && fixed[v]) {
            if (domains[u][0] == domains[v][0]) ++out.base;
        } else if (fixed[u] || fixed[v]) {
            const int free_v = fixed[u] ? v : u;
            const int pin = fixed[u] ? domains[u][0] : domains[v][0];
            Factor f;
            f.scope = {free_v};
            f.table.resize(domains[free_v].size());
            for (std::size_t i = 0; i < domains[free_v].size(); ++i)
                f.table[i] = domains[free_v][i] == pin ? 1 : 0;
            add_factor(std::move(f));
        } else {
            Factor f;
            f.scope = {std::min(u, v), std::max(u, v)};
            const auto& du = domains[f.scope[0]];
            const auto& dv = domains[f.scope[1]];
            f.table.resize(du.size() * dv.size());
            for (std::size_t j = 0; j < dv.size(); ++j)
                for (std::size_t i = 0; i < du.size(); ++i)
                    f.table[j * du.size() + i] = du[i] == dv[j] ? 1 : 0;
            add_factor(std::move(f));
        }
    }

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (!fixed[v] && !kept[v]) order.push_back(v);

    auto neighbors_of = [&](int v) {
        std::set<int> nb;
        for (int fid : incident[v])
            for (int w : factors[fid].scope)
                if (w != v) nb.insert(w);
        return nb;
    };

    // min-degree elimination, ties by vertex id
    std::set<std::pair<int, int>> queue;
    std::vector<int> deg(n, 0);
    for (int v : order) {
        deg[v] = static_cast<int>(neighbors_of(v).size());
        queue.insert({deg[v], v});
    }
    while (!queue.empty()) {
        const int v = queue.begin()->second;
        queue.erase(queue.begin());
        auto nb_set = neighbors_of(v);
        std::vector<int> new_scope(nb_set.begin(), nb_set.end());

        long long width = 1;
        for (int w : new_scope) {
            width *= static_cast<long long>(domains[w].size());
            if (width > kEliminationWidthCap)
                throw cap_error("GadgetTooLarge: elimination width cap exceeded");
        }

        // gather v's factors and detach them everywhere
        const std::vector<int> ids(incident[v].begin(), incident[v].end());
        std::vector<Factor> mine;
        mine.reserve(ids.size());
        for (int fid : ids) mine.push_back(std::move(factors[fid]));
        for (int w : new_scope)
            if (!kept[w])
                for (int fid : ids) incident[w].erase(fid);
        incident[v].clear();

        Factor merged;
        merged.scope = new_scope;
        merged.table.assign(static_cast<std::size_t>(width), 0);

        // per factor: position of each scope vertex inside new_scope (-1 = v)
        std::vector<std::vector<int>> positions(mine.size());
        std::vector<std::vector<long long>> strides(mine.size());
        for (std::size_t m = 0; m < mine.size(); ++m) {
            long long mul = 1;
            for (int w : mine[m].scope) {
                positions[m].push_back(
                    w == v ? -1
                           : static_cast<int>(std::lower_bound(new_scope.begin(), new_scope.end(),
                                                               w) -
                                              new_scope.begin()));
                strides[m].push_back(mul);
                mul *= static_cast<long long>(domains[w].size());
            }
        }

        std::vector<int> assign(new_scope.size(), 0);
        for (long long idx = 0; idx < width; ++idx) {
            long long t = idx;
            for (std::size_t i = 0; i < new_scope.size(); ++i) {
                assign[i] = static_cast<int>(t % domains[new_scope[i]].size());
                t /= static_cast<long long>(domains[new_scope[i]].size());
            }
            long long best = kCostInf;
            for (std::size_t ci = 0; ci < domains[v].size(); ++ci) {
                long long sum = 0;
                for (std::size_t m = 0; m < mine.size(); ++m) {
                    long long fidx = 0;
                    for (std::size_t sp = 0; sp < positions[m].size(); ++sp) {
                        const long long val = positions[m][sp] < 0
                                                  ? static_cast<long long>(ci)
                                                  : static_cast<long long>(assign[positions[m][sp]]);
                        fidx += val * strides[m][sp];
                    }
                    sum += mine[m].table[fidx];
                }
                best = std::min(best, sum);
            }
            merged.table[idx] = best;
        }
        add_factor(std::move(merged));
        for (int w : new_scope) {
            if (kept[w]) continue;
            queue.erase({deg[w], w});
            deg[w] = static_cast<int>(neighbors_of(w).size());
            queue.insert({deg[w], w});
        }
    }
    return out;
}

// one-shot minimum: eliminate everything
long long eliminate_min(const Graph& g, std::vector<std::vector<int>> domains) {
    EliminationResult res = eliminate_keep(g, domains, {});
    return res.infeasible ? kCostInf : res.base;
}

// evaluate residual factors at a pinned assignment of the kept vertices
long long evaluate_kept(const EliminationResult& res,
                        const std::vector<std::vector<int>>& domains,
                        const std::vector<int>& value_of) {
    long long total = res.base;
    for (const auto& f : res.factors) {
        long long fidx = 0, mul = 1;
        for (int w : f.scope) {
            const auto& dom = domains[w];
            const auto it = std::lower_bound(dom.begin(), dom.end(), value_of[w]);
            if (it == dom.end() || *it != value_of[w]) return kCostInf;
            fidx += static_cast<long long>(it - dom.begin()) * mul;
            mul *= static_cast<long long>(dom.size());
        }
        total += f.table[fidx];
        if (total >= kCostInf) return kCostInf;
    }
    return total;
}

}  // namespace

long long cost_ed(const Gadget& gad, const std::vector<int>& d) {
    if (static_cast<int>(d.size()) != static_cast<int>(gad.portals.size()))
        throw validation_error("portal tuple arity mismatch");
    std::vector<std::vector<int>> domains(gad.graph.n());
    for (int v = 0; v < gad.graph.n(); ++v) domains[v] = gad.lists.lists[v];
    for (std::size_t i = 0; i < gad.portals.size(); ++i) {
        const int v = gad.portals[i];
        if (!gad.lists.allows(v, d[i])) return kCostInf;
        domains[v] = {d[i]};
    }
    return eliminate_min(gad.graph, std::move(domains));
}

long long min_improper_coloring(const Graph& g, int q) {
    std::vector<std::vector<int>> domains(g.n());
    std::vector<int> all(q);
    for (int c = 0; c < q; ++c) all[c] = c + 1;
    for (int v = 0; v < g.n(); ++v) domains[v] = all;
    return eliminate_min(g, std::move(domains));
}

RealizationReport verify_realization(const Gadget& gad, const Relation& R) {
    RealizationReport rep;
    const long long total = R.tuple_space();

    std::vector<std::vector<int>> domains(gad.graph.n());
    for (int v = 0; v < gad.graph.n(); ++v) domains[v] = gad.lists.lists[v];
    EliminationResult res = eliminate_keep(gad.graph, domains, gad.portals);

    std::vector<int> d(R.r, 1);
    std::vector<int> value_of(gad.graph.n(), 0);
    std::vector<long long> in_costs, out_costs;
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = R.r - 1; i >= 0; --i) {
            d[i] = static_cast<int>(x % R.q) + 1;
            x /= R.q;
        }
        long long cost;
        if (res.infeasible) {
            cost = kCostInf;
        } else {
            for (int i = 0; i < R.r; ++i) value_of[gad.portals[i]] = d[i];
            cost = evaluate_kept(res, domains, value_of);
        }
        rep.costs.emplace_back(d, cost);
        (R.contains(d) ? in_costs : out_costs).push_back(cost);
    }

    if (in_costs.empty()) {
        // vacuous: any k below every cost works
        long long mn = kCostInf;
        for (auto c : out_costs) mn = std::min(mn, c);
        rep.k = mn - 1;
        rep.realizes = true;
    } else {
        rep.k = in_costs[0];
        bool uniform_in = true;
        for (auto c : in_costs) uniform_in &= c == rep.k;
        bool separated = rep.k < kCostInf;
        for (auto c : out_costs) separated &= c > rep.k;
        rep.realizes = uniform_in && separated;
    }
    if (out_costs.empty()) {
        rep.omega_uniform = rep.realizes;
        rep.omega = 0;
    } else {
        bool uniform_out = true;
        for (auto c : out_costs) uniform_out &= c == out_costs[0];
        rep.omega_uniform = rep.realizes && uniform_out && out_costs[0] < kCostInf;
        rep.omega = rep.omega_uniform ? out_costs[0] - rep.k : 0;
    }
    return rep;
}

bool verify_extension_gadget(const Gadget& gad, const Relation& R) {
    const long long total = R.tuple_space();
    std::vector<int> d(R.r, 1);
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = R.r - 1; i >= 0; --i) {
            d[i] = static_cast<int>(x % R.q) + 1;
            x /= R.q;
        }
        const bool extends = cost_ed(gad, d) == 0;
        if (extends != R.contains(d)) return false;
    }
    return true;
}

// --- builders -------------------------------------------------------------------

namespace {

// append `sub` to `base`, identifying sub's portals with `portal_map`
void overlay(Graph* base_graph_edges_out, std::vector<std::pair<int, int>>& edges,
             std::vector<std::vector<int>>& lists, const Gadget& sub,
             const std::vector<int>& portal_map) {
    (void)base_graph_edges_out;
    const int offset = static_cast<int>(lists.size());
    std::vector<int> remap(sub.graph.n(), -1);
    for (std::size_t i = 0; i < sub.portals.size(); ++i) remap[sub.portals[i]] = portal_map[i];
    int next = offset;
    for (int v = 0; v < sub.graph.n(); ++v)
        if (remap[v] < 0) {
            remap[v] = next++;
            lists.push_back(sub.lists.lists[v]);
        }
    for (auto [u, v] : sub.graph.edges()) edges.emplace_back(remap[u], remap[v]);
}

Gadget assemble(int q, std::vector<std::vector<int>> lists,
                std::vector<std::pair<int, int>> edges, std::vector<int> portals) {
    Gadget g;
    g.graph = Graph(static_cast<int>(lists.size()), std::move(edges));
    g.lists.q = q;
    g.lists.lists = std::move(lists);
    g.portals = std::move(portals);
    return g;
}

void require_independent_portals(const Gadget& g) {
    for (std::size_t i = 0; i < g.portals.size(); ++i)
        for (std::size_t j = i + 1; j < g.portals.size(); ++j)
            if (g.graph.has_edge(g.portals[i], g.portals[j]))
                throw validation_error("portals must form an independent set");
}

}  // namespace

Gadget build_or2() {
    std::vector<std::vector<int>> lists(5, std::vector<int>{1, 2});
    lists[4] = {2};  // v5
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    return assemble(2, std::move(lists), std::move(edges), {0, 3});
}

Gadget stack_copies(const Gadget& gad, int omega) {
    if (omega < 1) throw validation_error("omega must be positive");
    require_independent_portals(gad);
    const int r = static_cast<int>(gad.portals.size());
    std::vector<std::vector<int>> lists;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> portals(r);
    for (int i = 0; i < r; ++i) {
        portals[i] = i;
        lists.push_back(gad.lists.lists[gad.portals[i]]);
    }
    for (int copy = 0; copy < omega; ++copy) overlay(nullptr, edges, lists, gad, portals);
    return assemble(gad.lists.q, std::move(lists), std::move(edges), std::move(portals));
}

Gadget build_or2_pow(int omega) { return stack_copies(build_or2(), omega); }

Gadget build_or(int p) {
    if (p < 2) throw validation_error("BadArity: OR gadget needs p >= 2");
    if (p == 2) return build_or2();

    // u = 0 with list {1}; x_i = 1+i; y_i = 1+p+i; z_i = 1+2p+i
    std::vector<std::vector<int>> lists;
    lists.push_back({1});
    for (int i = 0; i < 3 * p; ++i) lists.push_back({1, 2});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3 * p; ++i) edges.emplace_back(0, 1 + i);

    const Gadget or2 = build_or2();
    auto x = [&](int i) { return 1 + i; };
    auto y = [&](int i) { return 1 + p + i; };
    auto z = [&](int i) { return 1 + 2 * p + i; };
    auto add_copy = [&](int a, int b) { overlay(nullptr, edges, lists, or2, {a, b}); };

    for (int i = 0; i < p; ++i) add_copy(x(i), y(i));
    for (int i = 0; i < p; ++i) add_copy(y(i), z(i));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) add_copy(z(i), z(j));

    std::vector<int> portals(p);
    for (int i = 0; i < p; ++i) portals[i] = y(i);
    return assemble(2, std::move(lists), std::move(edges), std::move(portals));
}

Gadget build_forbid(const std::vector<int>& d) {
    const int p = static_cast<int>(d.size());
    for (int v : d)
        if (v != 1 && v != 2) throw validation_error("forbidden tuple must be over [2]");
    if (p == 0) throw validation_error("BadArity: empty forbidden tuple");

    if (p == 1) {
        // portal plus a pendant pinned to the forbidden color
        std::vector<std::vector<int>> lists{{1, 2}, {d[0]}};
        std::vector<std::pair<int, int>> edges{{0, 1}};
        return assemble(2, std::move(lists), std::move(edges), {0});
    }

    Gadget orp = build_or(p);
    std::vector<std::vector<int>> lists;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < orp.graph.n(); ++v) lists.push_back(orp.lists.lists[v]);
    for (auto e : orp.graph.edges()) edges.push_back(e);

    std::vector<int> portals(p);
    int next = orp.graph.n();
    for (int i = 0; i < p; ++i) {
        if (d[i] == 1) {
            lists.push_back({1, 2});
            edges.emplace_back(orp.portals[i], next);
            portals[i] = next++;
        } else {
            portals[i] = orp.portals[i];
        }
    }
    return assemble(2, std::move(lists), std::move(edges), std::move(portals));
}

Gadget build_relation(const Relation& R) {
    if (R.q != 2) throw validation_error("build_relation handles q=2 only");
    if (R.r < 1) throw validation_error("BadArity: relation arity must be positive");
    std::vector<std::vector<int>> lists(R.r, std::vector<int>{1, 2});
    std::vector<std::pair<int, int>> edges;
    std::vector<int> portals(R.r);
    for (int i = 0; i < R.r; ++i) portals[i] = i;

    const long long total = R.tuple_space();
    std::vector<int> d(R.r, 1);
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = R.r - 1; i >= 0; --i) {
            d[i] = static_cast<int>(x % 2) + 1;
            x /= 2;
        }
        if (R.contains(d)) continue;
        Gadget forbid = build_forbid(d);
        overlay(nullptr, edges, lists, forbid, portals);
    }
    return assemble(2, std::move(lists), std::move(edges), std::move(portals));
}

Gadget build_one_realizer(const Relation& R, int omega) {
    if (R.q != 2) throw validation_error("build_one_realizer handles q=2 only");
    if (omega < 1) throw validation_error("omega must be positive");
    const long long total = R.tuple_space();

    // excluded tuples, lexicographic
    std::vector<std::vector<int>> excluded;
    std::vector<int> d(R.r, 1);
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = R.r - 1; i >= 0; --i) {
            d[i] = static_cast<int>(x % 2) + 1;
            x /= 2;
        }
        if (!R.contains(d)) excluded.push_back(d);
    }
    const int m = static_cast<int>(excluded.size());

    // auxiliary relation over r + m coordinates
    Relation rp;
    rp.q = 2;
    rp.r = R.r + m;
    for (const auto& t : R.tuples) {
        std::vector<int> row = t;
        row.resize(rp.r, 1);
        rp.tuples.push_back(std::move(row));
    }
    for (int i = 0; i < m; ++i) {
        std::vector<int> row = excluded[i];
        row.resize(rp.r, 1);
        row[R.r + i] = 2;
        rp.tuples.push_back(std::move(row));
    }
    std::sort(rp.tuples.begin(), rp.tuples.end());

    Gadget core = build_relation(rp);
    std::vector<std::vector<int>> lists;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < core.graph.n(); ++v) lists.push_back(core.lists.lists[v]);
    for (auto e : core.graph.edges()) edges.push_back(e);

    // pendant {2}-vertices on the y-portals
    int next = core.graph.n();
    for (int i = 0; i < m; ++i) {
        lists.push_back({2});
        edges.emplace_back(core.portals[R.r + i], next++);
    }
    std::vector<int> portals(core.portals.begin(), core.portals.begin() + R.r);
    Gadget one = assemble(2, std::move(lists), std::move(edges), std::move(portals));
    return omega == 1 ? one : stack_copies(one, omega);
}

// --- Max Cut synthesis ------------------------------------------------------------

MaxCutInstance build_maxcut_instance(const MaxCsp& inst, long long z) {
    if (inst.d != 2) throw validation_error("build_maxcut_instance needs domain size 2");
    for (const auto& c : inst.constraints)
        if (c.scope.empty())
            throw validation_error("empty constraint scopes are not supported here");

    std::vector<std::vector<int>> lists(inst.var_count, std::vector<int>{1, 2});
    std::vector<std::pair<int, int>> edges;

    long long alpha_sum = 0;
    struct GadgetSpan {
        int begin = 0, end = 0;
        long long alpha = 0;
    };
    std::vector<GadgetSpan> spans;

    for (const auto& c : inst.constraints) {
        Relation rel;
        rel.q = 2;
        rel.r = static_cast<int>(c.scope.size());
        rel.tuples = c.relation;
        Gadget one = build_one_realizer(rel, 1);

        // alpha_i = the common satisfied cost reported by the verifier
        RealizationReport rep = verify_realization(one, rel);
        if (!rep.omega_uniform || rep.omega != 1)
            throw validation_error("constraint gadget failed 1-realization");
        alpha_sum += rep.k;

        GadgetSpan span;
        span.begin = static_cast<int>(lists.size());
        span.alpha = rep.k;
        overlay(nullptr, edges, lists, one, c.scope);
        span.end = static_cast<int>(lists.size());
        spans.push_back(span);
    }

    // list removal: apex A plus parallel paths
    const int apex = static_cast<int>(lists.size());
    lists.push_back({1, 2});
    for (const auto& span : spans) {
        for (int v = span.begin; v < span.end; ++v) {
            const auto& lst = lists[v];
            if (lst.size() != 1) continue;
            // omega = 1 realizers: alpha+omega+1 three-vertex paths for a
            // {1} list, alpha+2 four-vertex paths for a {2} list
            const long long copies = span.alpha + 2;
            if (lst[0] == 1) {
                for (long long i = 0; i < copies; ++i) {
                    const int mid = static_cast<int>(lists.size());
                    lists.push_back({1, 2});
                    edges.emplace_back(v, mid);
                    edges.emplace_back(mid, apex);
                }
            } else {
                for (long long i = 0; i < copies; ++i) {
                    const int m1 = static_cast<int>(lists.size());
                    lists.push_back({1, 2});
                    const int m2 = static_cast<int>(lists.size());
                    lists.push_back({1, 2});
                    edges.emplace_back(v, m1);
                    edges.emplace_back(m1, m2);
                    edges.emplace_back(m2, apex);
                }
            }
        }
    }
    // lists are gone now
    MaxCutInstance out;
    out.graph = Graph(static_cast<int>(lists.size()), std::move(edges));
    out.budget = z + alpha_sum;
    out.threshold = out.graph.m() - out.budget;
    for (int v = 0; v < inst.var_count; ++v) out.hub.push_back(v);
    out.hub.push_back(apex);
    return out;
}

long long oracle_maxcut(const Graph& g) {
    if (g.n() <= 20) {
        if (g.n() == 0) return 0;
        long long best = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << (g.n() - 1)); ++mask) {
            long long cut = 0;
            for (auto [u, v] : g.edges()) {
                const bool su = u == 0 ? false : ((mask >> (u - 1)) & 1);
                const bool sv = v == 0 ? false : ((mask >> (v - 1)) & 1);
                if (su != sv) ++cut;
            }
            best = std::max(best, cut);
        }
        return best;
    }
    return g.m() - min_improper_coloring(g, 2);
}

// --- files ---------------------------------------------------------------------------

Gadget parse_gadget(const std::string& text) {
    // strip gadget-specific lines, feed the rest to the graph parser
    std::istringstream in(text);
    std::string line, graph_part;
    std::vector<std::string> portal_lines, list_lines;
    int q = 2;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "portal") {
            portal_lines.push_back(line);
        } else if (tag == "list") {
            list_lines.push_back(line);
        } else if (tag == "q") {
            if (!(ls >> q) || q < 1) throw parse_error("bad q record");
        } else {
            graph_part += line + "\n";
        }
    }
    Gadget g;
    g.graph = parse_graph(graph_part);
    g.lists = ListAssignment::full(g.graph.n(), q);
    for (const auto& pl : portal_lines) {
        std::istringstream ls(pl);
        std::string tag;
        ls >> tag;
        int v;
        while (ls >> v) {
            if (v < 1 || v > g.graph.n()) throw parse_error("portal id out of range");
            g.portals.push_back(v - 1);
        }
    }
    for (const auto& ll : list_lines) {
        auto colon = ll.find(':');
        if (colon == std::string::npos) throw parse_error("list record missing ':'");
        std::istringstream head(ll.substr(4, colon - 4)), tail(ll.substr(colon + 1));
        int v;
        if (!(head >> v) || v < 1 || v > g.graph.n()) throw parse_error("list vertex out of range");
        std::vector<int> colors;
        int c;
        while (tail >> c) {
            if (c < 1 || c > q) throw parse_error("list color out of range");
            colors.push_back(c);
        }
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        g.lists.lists[v - 1] = std::move(colors);
    }
    std::set<int> distinct(g.portals.begin(), g.portals.end());
    if (distinct.size() != g.portals.size()) throw parse_error("duplicate portal");
    return g;
}

std::string serialize_gadget(const Gadget& gad) {
    std::ostringstream out;
    out << serialize_graph(gad.graph);
    out << "q " << gad.lists.q << '\n';
    out << "portal";
    for (int v : gad.portals) out << ' ' << v + 1;
    out << '\n';
    for (int v = 0; v < gad.graph.n(); ++v) {
        if (static_cast<int>(gad.lists.lists[v].size()) == gad.lists.q) continue;
        out << "list " << v + 1 << ':';
        for (int c : gad.lists.lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

Relation parse_relation(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    Relation rel;
    long long count;
    if (!(in >> tag) || tag != "rel") throw parse_error("missing 'rel <q> <r> <count>' header");
    if (!(in >> rel.q >> rel.r >> count) || rel.q < 1 || rel.r < 0 || count < 0)
        throw parse_error("malformed relation header");
    for (long long i = 0; i < count; ++i) {
        std::vector<int> t(rel.r);
        for (int j = 0; j < rel.r; ++j)
            if (!(in >> t[j]) || t[j] < 1 || t[j] > rel.q)
                throw parse_error("relation tuple value out of range");
        rel.tuples.push_back(std::move(t));
    }
    std::sort(rel.tuples.begin(), rel.tuples.end());
    rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    return rel;
}

std::string serialize_relation(const Relation& rel) {
    std::ostringstream out;
    out << "rel " << rel.q << ' ' << rel.r << ' ' << rel.tuples.size() << '\n';
    for (const auto& t : rel.tuples) {
        for (std::size_t i = 0; i < t.size(); ++i) out << t[i] << (i + 1 == t.size() ? '\n' : ' ');
        if (t.empty()) out << '\n';
    }
    return out.str();
}

}  // namespace hubsolve
