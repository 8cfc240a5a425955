#include "hubsolve/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "hubsolve/errors.hpp"

namespace hubsolve {

std::vector<Triangle> all_triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.has_edge(u, w)) out.push_back({u, v, w});
            }
        }
    return out;
}

bool verify_triangle_packing(const Graph& g, const std::vector<Triangle>& packing) {
    std::set<int> used;
    for (const auto& t : packing) {
        if (!(g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2])))
            return false;
        for (int v : t) {
            if (used.count(v)) return false;
            used.insert(v);
        }
    }
    return true;
}

// --- oracles ------------------------------------------------------------------

namespace {

// exact max packing over an explicit triangle list, branch and bound
long long max_packing_bb(const std::vector<Triangle>& tris, std::vector<char>& used, int n,
                         std::size_t at, long long have, long long& best) {
    // bound: remaining triangles can add at most (free vertices)/3
    int free_count = 0;
    for (int v = 0; v < n; ++v)
        if (!used[v]) ++free_count;
    if (have + free_count / 3 <= best) return best;
    if (at == tris.size()) {
        best = std::max(best, have);
        return best;
    }
    const auto& t = tris[at];
    if (!used[t[0]] && !used[t[1]] && !used[t[2]]) {
        used[t[0]] = used[t[1]] = used[t[2]] = 1;
        max_packing_bb(tris, used, n, at + 1, have + 1, best);
        used[t[0]] = used[t[1]] = used[t[2]] = 0;
    }
    max_packing_bb(tris, used, n, at + 1, have, best);
    return best;
}

}  // namespace

long long oracle_triangle_packing(const Graph& g) {
    auto tris = all_triangles(g);
    if (static_cast<int>(tris.size()) > kTrianglePackingCapTriangles &&
        g.n() > kTrianglePackingCapVertices)
        throw cap_error("InstanceTooLarge: triangle-packing oracle caps exceeded");
    std::vector<char> used(g.n(), 0);
    long long best = 0;
    max_packing_bb(tris, used, g.n(), 0, 0, best);
    return best;
}

bool triangle_partition_exists(const Graph& g) {
    if (g.n() % 3 != 0) return false;
    auto tris = all_triangles(g);
    std::vector<std::vector<int>> tri_of(g.n());
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (int v : tris[i]) tri_of[v].push_back(static_cast<int>(i));

    std::vector<char> covered(g.n(), 0);
    long long nodes = 0;
    const long long node_cap = 10'000'000;

    std::function<bool(int)> rec = [&](int left) -> bool {
        if (++nodes > node_cap)
            throw cap_error("InstanceTooLarge: triangle-partition search cap exceeded");
        if (left == 0) return true;
        // pick the uncovered vertex with the fewest available triangles
        int pick = -1;
        int pick_count = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (covered[v]) continue;
            int count = 0;
            for (int ti : tri_of[v]) {
                const auto& t = tris[ti];
                if (!covered[t[0]] && !covered[t[1]] && !covered[t[2]]) ++count;
            }
            if (pick < 0 || count < pick_count) {
                pick = v;
                pick_count = count;
                if (count == 0) break;
            }
        }
        if (pick_count == 0) return false;
        for (int ti : tri_of[pick]) {
            const auto& t = tris[ti];
            if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 1;
            if (rec(left - 3)) return true;
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 0;
        }
        return false;
    };
    return rec(g.n());
}

// --- Delta-eq gadget ---------------------------------------------------------------

TriangleGadget build_trieq(int r) {
    if (r < 3 || r % 3 != 0) throw validation_error("BadArity: trieq needs r >= 3, r = 0 mod 3");
    // p_i = i, q_i = r+i, a_i = 2r+i, b_i = 3r+i
    auto p = [&](int i) { return i; };
    auto qv = [&](int i) { return r + i; };
    auto a = [&](int i) { return 2 * r + i; };
    auto b = [&](int i) { return 3 * r + i; };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(a(i), b(i));            // cycle
        edges.emplace_back(b(i), a((i + 1) % r));  // cycle
        edges.emplace_back(a(i), p(i));            // P1
        edges.emplace_back(b(i), p(i));
        edges.emplace_back(qv(i), b(i));           // P2
        edges.emplace_back(qv(i), a((i + 1) % r));
    }
    for (int i = 0; i < r / 3; ++i) {
        const int x = qv((3 * i + 1) % r), y = qv((3 * i + 2) % r), z = qv((3 * i + 3) % r);
        edges.emplace_back(x, y);  // P3
        edges.emplace_back(y, z);
        edges.emplace_back(x, z);
    }
    TriangleGadget gad;
    gad.graph = Graph(4 * r, std::move(edges));
    for (int i = 0; i < r; ++i) gad.portals.push_back(p(i));
    return gad;
}

std::vector<std::vector<Triangle>> enumerate_full_cover_packings(const TriangleGadget& gad) {
    const Graph& g = gad.graph;
    auto tris = all_triangles(g);
    std::vector<char> is_portal(g.n(), 0);
    for (int v : gad.portals) is_portal[v] = 1;

    std::vector<std::vector<int>> tri_of(g.n());
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (int v : tris[i]) tri_of[v].push_back(static_cast<int>(i));

    std::vector<std::vector<Triangle>> found;
    std::vector<char> covered(g.n(), 0);
    std::vector<int> chosen;

    // always branch on the lowest uncovered non-portal vertex, so each
    // qualifying packing is produced exactly once
    std::function<void()> rec = [&]() {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (!is_portal[v] && !covered[v]) {
                pick = v;
                break;
            }
        if (pick < 0) {
            std::vector<Triangle> packing;
            for (int ti : chosen) packing.push_back(tris[ti]);
            found.push_back(std::move(packing));
            return;
        }
        for (int ti : tri_of[pick]) {
            const auto& t = tris[ti];
            if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 1;
            chosen.push_back(ti);
            rec();
            chosen.pop_back();
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 0;
        }
    };
    rec();
    return found;
}

TriangleReduction reduce_partition_to_triangle(const SetSystem& partition_eq) {
    if (partition_eq.variant != SetVariant::PartitionEq)
        throw validation_error("expected a partition-eq instance");
    const int r = partition_eq.d;
    if (r < 3 || r % 3 != 0)
        throw validation_error("set size must be a positive multiple of 3; pad first");
    for (auto set : partition_eq.sets)
        if (std::popcount(set) != r) throw validation_error("family is not r-uniform");

    const int n = partition_eq.n;
    std::vector<std::pair<int, int>> edges;
    int next = n;
    const TriangleGadget proto = build_trieq(r);

    for (auto set : partition_eq.sets) {
        std::vector<int> members;
        for (int e = 0; e < 62; ++e)
            if ((set >> e) & 1) members.push_back(e);
        // remap: portal i -> universe vertex members[i], internals fresh
        std::vector<int> remap(proto.graph.n(), -1);
        for (int i = 0; i < r; ++i) remap[proto.portals[i]] = members[i];
        for (int v = 0; v < proto.graph.n(); ++v)
            if (remap[v] < 0) remap[v] = next++;
        for (auto [u, v] : proto.graph.edges()) edges.emplace_back(remap[u], remap[v]);
    }

    TriangleReduction out;
    out.graph = Graph(next, std::move(edges));
    std::vector<int> hub(n);
    for (int i = 0; i < n; ++i) hub[i] = i;
    out.hub = validate_hub(out.graph, hub, 4 * r, r);
    return out;
}

// --- splitters ------------------------------------------------------------------------

bool splits_evenly(const std::vector<int>& member, const std::vector<int>& subset, int ell) {
    const int p = static_cast<int>(subset.size());
    std::vector<int> count(ell + 1, 0);
    for (int e : subset) ++count[member[e]];
    const int lo = p / ell, hi = (p + ell - 1) / ell;
    const int high_colors = p % ell;
    int highs = 0;
    for (int c = 1; c <= ell; ++c) {
        if (count[c] == hi && hi != lo) {
            ++highs;
        } else if (count[c] != lo) {
            return false;
        }
    }
    return hi == lo || highs == high_colors;
}

namespace {

double log_balance_probability(int p, int ell) {
    // probability that p uniform draws over [ell] form the balanced histogram
    const int lo = p / ell, hi = (p + ell - 1) / ell, a = p % ell;
    double logp = std::lgamma(p + 1) - p * std::log(static_cast<double>(ell));
    logp += std::lgamma(ell + 1) - std::lgamma(a + 1) - std::lgamma(ell - a + 1);
    logp -= a * std::lgamma(hi + 1) + (ell - a) * std::lgamma(lo + 1);
    return logp;
}

}  // namespace

SplitterFamily build_splitter(int N, int p, int ell, const std::string& backend,
                              std::uint64_t seed, long long reps) {
    if (p > N || p < 0 || ell < 1) throw validation_error("need 0 <= p <= N and ell >= 1");
    SplitterFamily fam;
    fam.N = N;
    fam.p = p;
    fam.ell = ell;
    fam.backend = backend;
    fam.seed = seed;

    if (ell == 1 || p == 0 || N == 0) {
        fam.members.push_back(std::vector<int>(N, 1));
        fam.reps = 1;
        return fam;
    }

    if (backend == "exhaustive") {
        if (N > kSplitterExhaustiveCapN || p > kSplitterExhaustiveCapP)
            throw cap_error("ParamsTooLarge: exhaustive splitter supports N <= 14, p <= 5");
        // enumerate all p-subsets
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == p) {
                subsets.push_back(cur);
                return;
            }
            for (int v = from; v < N; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
        std::vector<char> done(subsets.size(), 0);
        std::size_t remaining = subsets.size();
        while (remaining > 0) {
            std::size_t first = 0;
            while (done[first]) ++first;
            // balanced round-robin on the subset, then continue round-robin
            // over the remaining elements
            std::vector<int> member(N, 0);
            int next_color = 0;
            for (int e : subsets[first]) {
                member[e] = next_color + 1;
                next_color = (next_color + 1) % ell;
            }
            for (int e = 0; e < N; ++e)
                if (member[e] == 0) {
                    member[e] = next_color + 1;
                    next_color = (next_color + 1) % ell;
                }
            for (std::size_t i = 0; i < subsets.size(); ++i)
                if (!done[i] && splits_evenly(member, subsets[i], ell)) {
                    done[i] = 1;
                    --remaining;
                }
            fam.members.push_back(std::move(member));
        }
        fam.reps = static_cast<long long>(fam.members.size());
        return fam;
    }

    if (backend == "monte-carlo") {
        if (reps <= 0) {
            const double rho = std::exp(log_balance_probability(p, ell));
            // (1 - rho)^reps <= 2^-20
            const double target = 20.0 * std::log(2.0);
            reps = rho >= 1.0 ? 1
                              : static_cast<long long>(std::ceil(target / -std::log1p(-rho)));
            reps = std::max<long long>(reps, 1);
        }
        Rng rng(seed);
        for (long long i = 0; i < reps; ++i) {
            std::vector<int> member(N);
            for (int e = 0; e < N; ++e) member[e] = static_cast<int>(rng.range(1, ell));
            fam.members.push_back(std::move(member));
        }
        fam.reps = reps;
        return fam;
    }
    throw validation_error("unknown splitter backend '" + backend + "'");
}

// --- precolored solver -------------------------------------------------------------------

namespace {

struct ColorData {
    std::vector<int> comp_ids;          // indices into components
    std::vector<Triangle> q_triangles;  // D_i
    long long X = 0;                    // max packing inside the components
    // per candidate hub set S: best witness packing value and triangles
    std::map<std::uint64_t, std::pair<long long, std::vector<Triangle>>> valid;
    long long max_value = 0;
};

// max triangle packing inside one small vertex set, given used vertices
long long component_max_packing(const std::vector<Triangle>& tris, std::vector<char>& used,
                                std::vector<Triangle>* out) {
    // greedy-free exact search over the (small) triangle list
    std::function<long long(std::size_t, long long)> rec = [&](std::size_t at,
                                                               long long have) -> long long {
        if (at == tris.size()) {
            return have;
        }
        long long best = rec(at + 1, have);
        const auto& t = tris[at];
        if (!used[t[0]] && !used[t[1]] && !used[t[2]]) {
            used[t[0]] = used[t[1]] = used[t[2]] = 1;
            best = std::max(best, rec(at + 1, have + 1));
            used[t[0]] = used[t[1]] = used[t[2]] = 0;
        }
        return best;
    };
    long long best = rec(0, 0);
    if (out) {
        // reconstruct one optimal packing greedily against the known optimum
        std::function<bool(std::size_t, long long)> build = [&](std::size_t at,
                                                                long long need) -> bool {
            if (need <= 0) return true;
            if (at == tris.size()) return false;
            const auto& t = tris[at];
            if (!used[t[0]] && !used[t[1]] && !used[t[2]]) {
                used[t[0]] = used[t[1]] = used[t[2]] = 1;
                out->push_back(t);
                if (rec(at + 1, 0) >= need - 1 && build(at + 1, need - 1)) return true;
                out->pop_back();
                used[t[0]] = used[t[1]] = used[t[2]] = 0;
            }
            return build(at + 1, need);
        };
        build(0, best);
    }
    return best;
}

}  // namespace

TriangleVerdict solve_precolored(const PrecoloredInstance& inst) {
    const Graph& g = inst.graph;
    const auto& Q = inst.hub;
    const int p = static_cast<int>(Q.size());
    const int c = inst.capacity;
    if (c < 1) throw validation_error("capacity must be positive");
    if (p > 20) throw cap_error("ParamsTooLarge: precolored solver supports |Q| <= 20");

    auto comps = g.components_without(Q);
    std::vector<char> in_hub(g.n(), 0);
    for (int v : Q) in_hub[v] = 1;

    // triangles fully inside Q
    std::vector<Triangle> d_triangles;
    for (const auto& t : all_triangles(g))
        if (in_hub[t[0]] && in_hub[t[1]] && in_hub[t[2]]) d_triangles.push_back(t);

    const int ell = p == 0 ? 1 : (p + c - 1) / c;
    if (static_cast<int>(inst.psi.size()) != static_cast<int>(comps.size() + d_triangles.size()))
        throw validation_error("psi must color every component and every hub triangle");
    for (int color : inst.psi)
        if (color < 1 || color > ell) throw validation_error("psi color out of range");

    if (inst.t <= 0) return {true, {}};

    // sigma from the actual components
    int sigma = 1;
    for (const auto& comp : comps) sigma = std::max(sigma, static_cast<int>(comp.size()));
    const int max_s = std::min(p, 2 * c * sigma);

    std::vector<int> hub_index(g.n(), -1);
    for (int i = 0; i < p; ++i) hub_index[Q[i]] = i;
    std::vector<int> comp_of(g.n(), -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);

    // triangles per component (fully inside)
    std::vector<std::vector<Triangle>> comp_tris(comps.size());
    // hub-touching triangles: at least one hub vertex and at most two
    std::vector<Triangle> crossing;
    for (const auto& t : all_triangles(g)) {
        int hubs = in_hub[t[0]] + in_hub[t[1]] + in_hub[t[2]];
        if (hubs == 0) {
            comp_tris[comp_of[t[0]]].push_back(t);
        } else if (hubs < 3) {
            crossing.push_back(t);
        }
    }

    std::vector<ColorData> colors(ell);
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        colors[inst.psi[ci] - 1].comp_ids.push_back(static_cast<int>(ci));
    for (std::size_t di = 0; di < d_triangles.size(); ++di)
        colors[inst.psi[comps.size() + di] - 1].q_triangles.push_back(d_triangles[di]);

    std::vector<char> used(g.n(), 0);
    for (int i = 0; i < ell; ++i) {
        auto& cd = colors[i];
        for (int ci : cd.comp_ids) cd.X += component_max_packing(comp_tris[ci], used, nullptr);
    }

    // enumerate, per color, every candidate hub set S with its best witness
    for (int i = 0; i < ell; ++i) {
        auto& cd = colors[i];
        // triangles available to this color: D_i plus crossing triangles
        // whose component part is colored i
        std::vector<Triangle> cand = cd.q_triangles;
        for (const auto& t : crossing) {
            int comp = -1;
            for (int v : t)
                if (!in_hub[v]) comp = comp_of[v];
            if (comp >= 0 && inst.psi[comp] == i + 1) cand.push_back(t);
        }
        const std::size_t cn = cand.size();
        std::vector<char> is_q_triangle(cn, 0);
        for (std::size_t k = 0; k < cn; ++k)
            is_q_triangle[k] = in_hub[cand[k][0]] && in_hub[cand[k][1]] && in_hub[cand[k][2]];

        std::vector<Triangle> picked;
        std::set<int> active_comps;
        long long active_d = 0;
        std::uint64_t s_mask = 0;

        std::function<void(std::size_t)> rec = [&](std::size_t at) {
            // record the current packing extended by component-internal optima
            {
                long long value = static_cast<long long>(picked.size());
                std::vector<Triangle> full = picked;
                for (int ci : cd.comp_ids) {
                    std::vector<Triangle> part;
                    value += component_max_packing(comp_tris[ci], used, &part);
                    for (const auto& t : part) {
                        full.push_back(t);
                        for (int v : t) used[v] = 1;
                    }
                }
                for (const auto& t : full)
                    for (int v : t)
                        if (!in_hub[v]) used[v] = 0;
                for (const auto& t : picked)
                    for (int v : t)
                        if (!in_hub[v]) used[v] = 1;
                auto it = cd.valid.find(s_mask);
                if (it == cd.valid.end() || it->second.first < value)
                    cd.valid[s_mask] = {value, std::move(full)};
                cd.max_value = std::max(cd.max_value, value);
            }
            if (at == cn) return;
            for (std::size_t k = at; k < cn; ++k) {
                const auto& t = cand[k];
                bool clash = false;
                for (int v : t)
                    if (used[v]) clash = true;
                if (clash) continue;
                // active budget
                int comp = -1;
                for (int v : t)
                    if (!in_hub[v]) comp = comp_of[v];
                const bool new_active = comp >= 0 && !active_comps.count(comp);
                const long long act = static_cast<long long>(active_comps.size()) + active_d +
                                      (new_active ? 1 : 0) + (is_q_triangle[k] ? 1 : 0);
                if (act > c) continue;
                std::uint64_t add_mask = 0;
                for (int v : t)
                    if (in_hub[v]) add_mask |= 1ULL << hub_index[v];
                if (std::popcount(s_mask | add_mask) > max_s) continue;

                for (int v : t) used[v] = 1;
                picked.push_back(t);
                if (new_active) active_comps.insert(comp);
                if (is_q_triangle[k]) ++active_d;
                const std::uint64_t saved = s_mask;
                s_mask |= add_mask;

                rec(k + 1);

                s_mask = saved;
                if (is_q_triangle[k]) --active_d;
                if (new_active) active_comps.erase(comp);
                picked.pop_back();
                for (int v : t) used[v] = 0;
            }
        };
        rec(0);
    }

    // iterate offset tuples q with sum(X_i + q_i) >= t
    std::vector<long long> qmax(ell);
    for (int i = 0; i < ell; ++i)
        qmax[i] = std::min<long long>(colors[i].max_value - colors[i].X,
                                      static_cast<long long>(c) * sigma);

    std::vector<long long> offsets(ell, 0);
    TriangleVerdict verdict;

    std::function<bool(int, long long)> iterate = [&](int i, long long sum_so_far) -> bool {
        if (i == ell) {
            if (sum_so_far < inst.t) return false;
            // set packing over Q plus one marker per color
            std::vector<std::uint64_t> sets;
            std::vector<std::pair<int, std::uint64_t>> origin;  // color, S
            for (int j = 0; j < ell; ++j) {
                const long long need = colors[j].X + offsets[j];
                for (const auto& [mask, vw] : colors[j].valid) {
                    if (vw.first < need) continue;
                    sets.push_back(mask | (1ULL << (p + j)));
                    origin.emplace_back(j, mask);
                }
            }
            SetSystem packer;
            packer.n = p + ell;
            packer.sets = sets;
            packer.variant = SetVariant::PackingLeSets;
            packer.d = std::min(packer.n, 2 * c * sigma + 1);
            packer.t = ell;
            packer.normalize();
            if (packer.n > 24) throw cap_error("ParamsTooLarge: precolored packer too large");
            SetOracleResult res = oracle_set(packer, 24);
            if (!res.yes) return false;

            // recover one disjoint selection, one set per color
            std::vector<std::uint64_t> chosen(ell, ~0ULL);
            std::function<bool(int, std::uint64_t)> select = [&](int j,
                                                                 std::uint64_t used_mask) -> bool {
                if (j == ell) return true;
                const long long need = colors[j].X + offsets[j];
                for (const auto& [mask, vw] : colors[j].valid) {
                    if (vw.first < need) continue;
                    if (mask & used_mask) continue;
                    chosen[j] = mask;
                    if (select(j + 1, used_mask | mask)) return true;
                }
                chosen[j] = ~0ULL;
                return false;
            };
            if (!select(0, 0)) return false;
            std::vector<Triangle> witness;
            for (int j = 0; j < ell; ++j) {
                const auto& vw = colors[j].valid.at(chosen[j]);
                witness.insert(witness.end(), vw.second.begin(), vw.second.end());
            }
            if (!verify_triangle_packing(g, witness) ||
                static_cast<long long>(witness.size()) < inst.t)
                throw std::logic_error("precolored witness failed verification");
            verdict.yes = true;
            verdict.witness = std::move(witness);
            return true;
        }
        for (long long qi = 0; qi <= qmax[i]; ++qi) {
            offsets[i] = qi;
            if (iterate(i + 1, sum_so_far + colors[i].X + qi)) return true;
        }
        return false;
    };
    iterate(0, 0);
    return verdict;
}

TriangleVerdict solve_triangle_packing(const Graph& g, const HubDecomposition& h, long long t,
                                       const TriangleSolveOptions& opts) {
    const int c = opts.capacity;
    if (c < 1) throw validation_error("capacity must be positive");
    if (t <= 0) return {true, {}};

    // pad the hub with isolated vertices so that c divides p and p >= c
    int p = h.p();
    int padded = std::max(p, c);
    if (padded % c != 0) padded += c - padded % c;
    std::vector<std::pair<int, int>> edges = g.edges();
    Graph gp(g.n() + (padded - p), std::move(edges));
    std::vector<int> hub = h.hub;
    for (int v = g.n(); v < gp.n(); ++v) hub.push_back(v);
    const int ell = padded / c;

    auto comps = gp.components_without(hub);
    std::vector<char> in_hub(gp.n(), 0);
    for (int v : hub) in_hub[v] = 1;
    std::vector<Triangle> d_triangles;
    for (const auto& tr : all_triangles(gp))
        if (in_hub[tr[0]] && in_hub[tr[1]] && in_hub[tr[2]]) d_triangles.push_back(tr);

    const int N = static_cast<int>(comps.size() + d_triangles.size());
    if (N == 0) return {t <= 0, {}};

    SplitterFamily fam = build_splitter(N, std::min(padded, N), ell, opts.backend, opts.seed,
                                        opts.reps);

    for (const auto& member : fam.members) {
        PrecoloredInstance inst;
        inst.graph = gp;
        inst.t = t;
        inst.hub = hub;
        inst.capacity = c;
        inst.psi = member;
        TriangleVerdict v = solve_precolored(inst);
        if (v.yes) {
            if (!verify_triangle_packing(g, v.witness))
                throw std::logic_error("triangle witness failed verification");
            return v;
        }
    }
    return {false, {}};
}

}  // namespace hubsolve
