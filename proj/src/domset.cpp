#include "hubsolve/domset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hubsolve/errors.hpp"

namespace hubsolve {

bool is_dominating_set(const Graph& g, const std::vector<int>& set) {
    std::vector<char> dominated(g.n(), 0);
    for (int v : set) {
        dominated[v] = 1;
        for (int w : g.neighbors(v)) dominated[w] = 1;
    }
    for (char d : dominated)
        if (!d) return false;
    return true;
}

std::vector<int> oracle_domset(const Graph& g, int cap) {
    if (g.n() > cap)
        throw cap_error("InstanceTooLarge: domset oracle supports n <= " + std::to_string(cap));
    std::vector<int> best;
    for (int v = 0; v < g.n(); ++v) best.push_back(v);  // whole vertex set

    std::vector<int> chosen;
    std::vector<int> cover_count(g.n(), 0);

    std::function<void()> rec = [&]() {
        if (chosen.size() >= best.size()) return;
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (cover_count[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) {
            best = chosen;
            return;
        }
        // someone in N[pick] must join the dominating set
        std::vector<int> cands{pick};
        cands.insert(cands.end(), g.neighbors(pick).begin(), g.neighbors(pick).end());
        for (int cand : cands) {
            chosen.push_back(cand);
            ++cover_count[cand];
            for (int w : g.neighbors(cand)) ++cover_count[w];
            rec();
            --cover_count[cand];
            for (int w : g.neighbors(cand)) --cover_count[w];
            chosen.pop_back();
        }
    };
    rec();
    if (!is_dominating_set(g, best)) throw std::logic_error("domset oracle produced a bad set");
    return best;
}

std::vector<int> solve_domset_hub(const Graph& g, const HubDecomposition& h) {
    const int p = h.p();
    const auto& Q = h.hub;
    std::vector<int> hub_index(g.n(), -1);
    for (int i = 0; i < p; ++i) hub_index[Q[i]] = i;

    // labels: 0 = selected, 1 = dominated inside the hub, 2 = needs a
    // component vertex
    std::vector<int> label(p, 0);
    long long best_cost = -1;
    std::vector<int> best_set;

    const auto& comps = h.components;

    std::function<void(int)> enumerate = [&](int at) {
        if (at < p) {
            for (int lab = 0; lab < 3; ++lab) {
                label[at] = lab;
                enumerate(at + 1);
            }
            return;
        }
        // selected hub vertices
        std::vector<int> selected;
        std::vector<char> sel_mask(g.n(), 0);
        for (int i = 0; i < p; ++i)
            if (label[i] == 0) {
                selected.push_back(Q[i]);
                sel_mask[Q[i]] = 1;
            }
        // label-1 vertices must already be dominated by the hub selection
        std::vector<int> needs;  // hub vertices waiting for component domination
        for (int i = 0; i < p; ++i) {
            if (label[i] == 0) continue;
            bool dominated = false;
            for (int w : g.neighbors(Q[i]))
                if (sel_mask[w]) {
                    dominated = true;
                    break;
                }
            if (label[i] == 1) {
                if (!dominated) return;  // infeasible labeling
            } else {
                needs.push_back(i);
            }
        }
        const int k = static_cast<int>(needs.size());
        std::vector<int> needs_pos(p, -1);
        for (int j = 0; j < k; ++j) needs_pos[needs[j]] = j;

        // subset-cover DP over the needs-set, components processed in order
        const std::uint64_t full = k == 0 ? 0 : (1ULL << k) - 1;
        std::vector<long long> dp(full + 1, -1);
        dp[0] = 0;
        std::vector<std::pair<std::uint64_t, long long>> options;
        // remember per component the选 chosen option for witness rebuilding
        std::vector<std::vector<std::pair<std::uint64_t, std::vector<int>>>> comp_options(
            comps.size());

        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const auto& comp = comps[ci];
            const int s = static_cast<int>(comp.size());
            options.clear();
            std::set<std::pair<std::uint64_t, long long>> seen;
            for (std::uint64_t pick = 0; pick < (1ULL << s); ++pick) {
                // component must end up fully dominated
                bool ok = true;
                for (int j = 0; j < s && ok; ++j) {
                    const int v = comp[j];
                    bool dom = (pick >> j) & 1;
                    if (!dom)
                        for (int w : g.neighbors(v)) {
                            if (sel_mask[w]) {
                                dom = true;
                                break;
                            }
                            const auto it = std::lower_bound(comp.begin(), comp.end(), w);
                            if (it != comp.end() && *it == w &&
                                ((pick >> (it - comp.begin())) & 1)) {
                                dom = true;
                                break;
                            }
                        }
                    ok = dom;
                }
                if (!ok) continue;
                // which needs-vertices does this choice dominate?
                std::uint64_t covered = 0;
                for (int j = 0; j < s; ++j) {
                    if (!((pick >> j) & 1)) continue;
                    for (int w : g.neighbors(comp[j])) {
                        const int hi = hub_index[w];
                        if (hi >= 0 && needs_pos[hi] >= 0) covered |= 1ULL << needs_pos[hi];
                    }
                }
                const long long cost = std::popcount(pick);
                if (seen.insert({covered, cost}).second) {
                    options.emplace_back(covered, cost);
                    std::vector<int> verts;
                    for (int j = 0; j < s; ++j)
                        if ((pick >> j) & 1) verts.push_back(comp[j]);
                    comp_options[ci].push_back({covered, std::move(verts)});
                }
            }
            // dp step
            std::vector<long long> next(full + 1, -1);
            for (std::uint64_t mask = 0; mask <= full; ++mask) {
                if (dp[mask] < 0) continue;
                for (const auto& [covered, cost] : options) {
                    const std::uint64_t nm = mask | (covered & full);
                    if (next[nm] < 0 || dp[mask] + cost < next[nm]) next[nm] = dp[mask] + cost;
                }
            }
            dp = std::move(next);
        }
        if (dp[full] < 0) return;
        const long long total = static_cast<long long>(selected.size()) + dp[full];
        if (best_cost >= 0 && total >= best_cost) return;

        // rebuild a witness by rerunning the DP with predecessor tracking
        std::vector<int> witness = selected;
        {
            std::vector<long long> cur(full + 1, -1);
            cur[0] = 0;
            std::vector<std::vector<std::pair<std::uint64_t, int>>> back(comps.size());
            std::vector<std::vector<long long>> layers{cur};
            for (std::size_t ci = 0; ci < comps.size(); ++ci) {
                std::vector<long long> next(full + 1, -1);
                back[ci].assign(full + 1, {0, -1});
                for (std::uint64_t mask = 0; mask <= full; ++mask) {
                    if (layers[ci][mask] < 0) continue;
                    for (std::size_t oi = 0; oi < comp_options[ci].size(); ++oi) {
                        const auto& [covered, verts] = comp_options[ci][oi];
                        const std::uint64_t nm = mask | (covered & full);
                        const long long cost =
                            layers[ci][mask] + static_cast<long long>(verts.size());
                        if (next[nm] < 0 || cost < next[nm]) {
                            next[nm] = cost;
                            back[ci][nm] = {mask, static_cast<int>(oi)};
                        }
                    }
                }
                layers.push_back(std::move(next));
            }
            std::uint64_t mask = full;
            for (int ci = static_cast<int>(comps.size()) - 1; ci >= 0; --ci) {
                const auto [prev, oi] = back[ci][mask];
                if (oi >= 0) {
                    const auto& verts = comp_options[ci][oi].second;
                    witness.insert(witness.end(), verts.begin(), verts.end());
                    mask = prev;
                }
            }
        }
        if (static_cast<long long>(witness.size()) != total || !is_dominating_set(g, witness))
            throw std::logic_error("domset hub witness rebuild mismatch");
        best_cost = total;
        best_set = witness;
    };
    enumerate(0);

    std::sort(best_set.begin(), best_set.end());
    if (!is_dominating_set(g, best_set))
        throw std::logic_error("domset witness failed verification");
    return best_set;
}

DomsetReduction reduce_setcover_to_domset(const SetSystem& cover) {
    std::uint64_t uni = 0;
    for (auto s : cover.sets) uni |= s;
    if (uni != cover.universe_mask())
        throw validation_error("set cover instance must cover its universe");
    const int n = cover.n;
    const int m = static_cast<int>(cover.sets.size());
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < m; ++j) {
        const int a = n + 3 * j, b = n + 3 * j + 1, c = n + 3 * j + 2;
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        for (int e = 0; e < n; ++e)
            if ((cover.sets[j] >> e) & 1) edges.emplace_back(a, e);
    }
    DomsetReduction out;
    out.graph = Graph(n + 3 * m, std::move(edges));
    for (int e = 0; e < n; ++e) out.hub.push_back(e);
    out.size_offset = m;
    return out;
}

DomsetReduction reduce_hittingset_to_domset(int n, const std::vector<std::uint64_t>& family) {
    if (family.empty() && n == 0) throw validation_error("empty hitting set instance");
    const int m = static_cast<int>(family.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, n + i);          // y_i - a_i
        edges.emplace_back(n + i, 2 * n + i);  // a_i - b_i
    }
    for (int j = 0; j < m; ++j)
        for (int e = 0; e < n; ++e)
            if ((family[j] >> e) & 1) edges.emplace_back(e, 3 * n + j);
    DomsetReduction out;
    out.graph = Graph(3 * n + m, std::move(edges));
    for (int e = 0; e < n; ++e) out.hub.push_back(e);
    out.size_offset = n;
    return out;
}

long long oracle_hitting_set(int n, const std::vector<std::uint64_t>& family) {
    if (n > 20) throw cap_error("InstanceTooLarge: hitting set oracle supports n <= 20");
    long long best = -1;
    for (std::uint64_t pick = 0; pick < (1ULL << n); ++pick) {
        bool hits = true;
        for (auto f : family)
            if (!(f & pick)) {
                hits = false;
                break;
            }
        if (hits) {
            const long long size = std::popcount(pick);
            if (best < 0 || size < best) best = size;
        }
    }
    return best;
}

}  // namespace hubsolve
