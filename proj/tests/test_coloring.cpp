#include "doctest.h"

#include "hubsolve/coloring.hpp"
#include "hubsolve/errors.hpp"
#include "hubsolve/graph.hpp"
#include "hubsolve/rng.hpp"
#include "hubsolve/wildcard_csp.hpp"

using namespace hubsolve;

namespace {

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

HubDecomposition random_hub(Rng& rng, const Graph& g) {
    std::vector<int> q;
    for (int v = 0; v < g.n(); ++v)
        if (rng.chance(0.45)) q.push_back(v);
    auto comps = g.components_without(q);
    int sigma = 1, delta = 2;
    std::vector<char> in_hub(g.n(), 0);
    for (int v : q) in_hub[v] = 1;
    for (const auto& comp : comps) {
        sigma = std::max(sigma, static_cast<int>(comp.size()));
        std::vector<char> nb(g.n(), 0);
        int count = 0;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (in_hub[w] && !nb[w]) {
                    nb[w] = 1;
                    ++count;
                }
        delta = std::max(delta, count);
    }
    return validate_hub(g, q, sigma, delta);
}

ListAssignment random_lists(Rng& rng, int n, int q) {
    ListAssignment l = ListAssignment::full(n, q);
    for (int v = 0; v < n; ++v) {
        if (!rng.chance(0.5)) continue;
        std::vector<int> lst;
        for (int c = 1; c <= q; ++c)
            if (rng.chance(0.7)) lst.push_back(c);
        l.lists[v] = lst;  // possibly empty: infeasible marker
    }
    return l;
}

}  // namespace

TEST_CASE("solve_coloring on the spec instances") {
    Graph k3 = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    HubDecomposition h = validate_hub(k3, {0, 1}, 1, 2);
    CHECK(solve_coloring(k3, h, 3).has_value());
    CHECK(!solve_coloring(k3, h, 2).has_value());
}

TEST_CASE("solve_coloring equals the oracle on random hubbed graphs") {
    Rng rng(101);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(1, 9)), 0.4);
        HubDecomposition h = random_hub(rng, g);
        for (int q : {2, 3}) {
            const bool fast = solve_coloring(g, h, q).has_value();
            const bool slow = oracle_coloring(g, q).has_value();
            REQUIRE(fast == slow);
        }
    }
}

TEST_CASE("solve_list_coloring rejects forced instances") {
    // C5 with all lists {1,2}: odd cycle, two colors
    Graph c5 = parse_graph("p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    ListAssignment l = ListAssignment::full(5, 2);
    HubDecomposition h = validate_hub(c5, {0, 2}, 2, 2);
    CHECK(!solve_list_coloring(c5, l, h).has_value());

    // reachable empty list
    ListAssignment l2 = ListAssignment::full(5, 2);
    l2.lists[3] = {};
    CHECK(!solve_list_coloring(c5, l2, h).has_value());
}

TEST_CASE("solve_list_coloring matches the oracle and the leaf budget") {
    Rng rng(202);
    const int q = 3;
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(1, 9)), 0.4);
        HubDecomposition h = random_hub(rng, g);
        ListAssignment l = random_lists(rng, g.n(), q);
        SolveStats stats;
        const bool fast = solve_list_coloring(g, l, h, &stats).has_value();
        const bool slow = oracle_list_coloring(g, l).has_value();
        REQUIRE(fast == slow);
        // leaves <= (q^delta - 1)^ceil(p/delta)
        const int delta = std::max(1, h.delta);
        long long bound = 1;
        const long long base = [&] {
            long long b = 1;
            for (int i = 0; i < delta; ++i) b *= q;
            return b - 1;
        }();
        for (int i = 0; i < (h.p() + delta - 1) / delta; ++i) bound *= base;
        REQUIRE(stats.leaves <= std::max(bound, 1LL));
    }
}

TEST_CASE("solve_coloring_vd on the spec instances") {
    Graph k3 = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    HubDecomposition h = validate_hub(k3, {0}, 2, 2);
    CHECK(solve_coloring_vd(k3, ListAssignment::full(3, 2), h).cost == 1);  // OCT of K3

    Graph k4 = parse_graph("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    HubDecomposition h4 = validate_hub(k4, {0, 1}, 2, 2);
    CHECK(solve_coloring_vd(k4, ListAssignment::full(4, 3), h4).cost == 1);

    Graph edgeless = parse_graph("p 5 0\n");
    HubDecomposition h5 = validate_hub(edgeless, {}, 1, 0);
    CHECK(solve_coloring_vd(edgeless, ListAssignment::full(5, 1), h5).cost == 0);

    // path a-b-c with q=1 is vertex cover
    Graph p3 = parse_graph("p 3 2\ne 1 2\ne 2 3\n");
    HubDecomposition hp = validate_hub(p3, {1}, 1, 1);
    CHECK(solve_coloring_vd_fast(p3, ListAssignment::full(3, 1), hp).cost == 1);

    Graph c5 = parse_graph("p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    HubDecomposition hc = validate_hub(c5, {0, 1}, 3, 2);
    CHECK(solve_coloring_vd_fast(c5, ListAssignment::full(5, 2), hc).cost == 1);
}

TEST_CASE("vd solvers agree with the oracle and each other") {
    Rng rng(303);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(1, 9)), 0.4);
        HubDecomposition h = random_hub(rng, g);
        for (int q : {1, 2, 3}) {
            ListAssignment l =
                rng.chance(0.5) ? ListAssignment::full(g.n(), q) : random_lists(rng, g.n(), q);
            const long long a = solve_coloring_vd(g, l, h).cost;
            const long long b = solve_coloring_vd_fast(g, l, h).cost;
            const long long c = oracle_vd(g, l).cost;
            REQUIRE(a == c);
            REQUIRE(b == c);
        }
    }
}

TEST_CASE("solve_coloring_ed on the spec instances") {
    Graph k3 = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    HubDecomposition h = validate_hub(k3, {0}, 2, 1);
    CHECK(solve_coloring_ed(k3, h, 2).cost == 1);  // Max Cut 2

    Graph c5 = parse_graph("p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    HubDecomposition hc = validate_hub(c5, {0}, 4, 2);
    CHECK(solve_coloring_ed(c5, hc, 2).cost == 1);  // Max Cut 4

    Graph k4 = parse_graph("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    HubDecomposition h4 = validate_hub(k4, {0}, 3, 3);
    CHECK(solve_coloring_ed(k4, h4, 3).cost == 1);
}

TEST_CASE("ed solver equals the oracle, plus a subset-search cross-check") {
    Rng rng(404);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(1, 9)), 0.4);
        HubDecomposition h = random_hub(rng, g);
        for (int q : {2, 3}) {
            REQUIRE(solve_coloring_ed(g, h, q).cost == oracle_ed(g, q).cost);
        }
    }
    // independent dual route: minimum deletion subset on small graphs
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(1, 6)), 0.5);
        if (g.m() > 12) continue;
        const long long by_colorings = oracle_ed(g, 2).cost;
        long long by_subsets = -1;
        for (std::uint64_t mask = 0; mask < (1ULL << g.m()); ++mask) {
            std::vector<std::pair<int, int>> kept;
            for (int i = 0; i < g.m(); ++i)
                if (!((mask >> i) & 1)) kept.push_back(g.edges()[i]);
            Graph sub(g.n(), kept);
            if (oracle_coloring(sub, 2).has_value()) {
                const long long size = std::popcount(mask);
                if (by_subsets < 0 || size < by_subsets) by_subsets = size;
            }
        }
        REQUIRE(by_colorings == by_subsets);
    }
}

TEST_CASE("monotonicity: edges raise vd/ed optima, vertex deletion lowers them") {
    Rng rng(505);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(rng, static_cast<int>(rng.range(2, 8)), 0.4);
        const int q = static_cast<int>(rng.range(2, 3));
        ListAssignment l = ListAssignment::full(g.n(), q);
        const long long vd = oracle_vd(g, l).cost;
        const long long ed = oracle_ed(g, q).cost;

        // add one random non-edge
        std::vector<std::pair<int, int>> non_edges;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
        if (!non_edges.empty()) {
            auto edges = g.edges();
            edges.push_back(non_edges[rng.below(non_edges.size())]);
            Graph g2(g.n(), edges);
            CHECK(oracle_vd(g2, l).cost >= vd);
            CHECK(oracle_ed(g2, q).cost >= ed);
        }
        // delete one vertex
        const int drop = static_cast<int>(rng.below(g.n()));
        std::vector<int> keep;
        for (int v = 0; v < g.n(); ++v)
            if (v != drop) keep.push_back(v);
        Graph g3 = g.induced(keep);
        ListAssignment l3 = ListAssignment::full(g3.n(), q);
        CHECK(oracle_vd(g3, l3).cost <= vd);
        CHECK(oracle_ed(g3, q).cost <= ed);
    }
}
