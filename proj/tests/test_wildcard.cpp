#include "doctest.h"

#include <algorithm>

#include "hubsolve/errors.hpp"
#include "hubsolve/rng.hpp"
#include "hubsolve/wildcard_csp.hpp"

using namespace hubsolve;

namespace {

// random tables repaired into monotone form by propagating minima upward
WildcardCsp random_monotone_csp(Rng& rng, int n, int q, int r, int constraints) {
    WildcardCsp csp;
    csp.var_count = n;
    csp.q = q;
    const int radix = q + 1;
    for (int ci = 0; ci < constraints; ++ci) {
        WildcardConstraint c;
        c.seq = ci;
        const int k = static_cast<int>(rng.range(1, std::min(r, n)));
        std::vector<int> vars(n);
        for (int v = 0; v < n; ++v) vars[v] = v;
        rng.shuffle(vars);
        c.scope.assign(vars.begin(), vars.begin() + k);
        std::sort(c.scope.begin(), c.scope.end());
        long long size = 1;
        for (int i = 0; i < k; ++i) size *= radix;
        c.table.resize(size);
        for (auto& e : c.table) e = rng.range(0, 4);
        // repair: process by increasing wildcard count, take the minimum of
        // all direct predecessors
        std::vector<std::pair<int, long long>> order;
        for (long long idx = 0; idx < size; ++idx) {
            int norm = 0;
            long long t = idx;
            for (int i = 0; i < k; ++i) {
                if (t % radix == q) ++norm;
                t /= radix;
            }
            order.emplace_back(norm, idx);
        }
        std::sort(order.begin(), order.end());
        for (auto [norm, idx] : order) {
            if (norm == 0) continue;
            long long mul = 1;
            for (int i = 0; i < k; ++i) {
                const int digit = static_cast<int>(idx / mul % radix);
                if (digit == q) {
                    for (int val = 0; val < q; ++val) {
                        const long long pred = idx - static_cast<long long>(q - val) * mul;
                        c.table[idx] = std::min(c.table[idx], c.table[pred]);
                    }
                }
                mul *= radix;
            }
        }
        csp.constraints.push_back(std::move(c));
    }
    return csp;
}

}  // namespace

TEST_CASE("check_wildcard_property on the spec examples") {
    WildcardCsp csp;
    csp.var_count = 1;
    csp.q = 1;
    WildcardConstraint c;
    c.scope = {0};
    c.table = {0, 0};  // constant zero
    csp.constraints.push_back(c);
    CHECK(check_wildcard_property(csp));

    csp.constraints[0].table = {0, 1};  // cost(1)=0, cost(x)=1: violates
    CHECK(!check_wildcard_property(csp));
    CHECK_THROWS_WITH_AS(solve_wildcard(csp), doctest::Contains("WildcardPropertyViolated"),
                         validation_error);
}

TEST_CASE("solve_wildcard on the spec examples") {
    // one variable, cost(1)=5, cost(x)=0, q=1: assign x, total 1
    WildcardCsp csp;
    csp.var_count = 1;
    csp.q = 1;
    WildcardConstraint c;
    c.scope = {0};
    c.table = {5, 0};
    csp.constraints.push_back(c);
    auto res = solve_wildcard(csp);
    CHECK(res.cost == 1);
    CHECK(res.assignment.values[0] == 1);  // the wildcard (encoded q)

    // empty constraint set: cost 0, no wildcards
    WildcardCsp free;
    free.var_count = 4;
    free.q = 2;
    auto res2 = solve_wildcard(free);
    CHECK(res2.cost == 0);
    CHECK(res2.assignment.norm(free.q) == 0);
}

TEST_CASE("solve_wildcard equals the oracle with the leaf bound") {
    Rng rng(33);
    for (int it = 0; it < 300; ++it) {
        const int n = static_cast<int>(rng.range(1, 8));
        const int q = static_cast<int>(rng.range(1, 3));
        const int r = static_cast<int>(rng.range(1, 3));
        WildcardCsp csp = random_monotone_csp(rng, n, q, r, static_cast<int>(rng.range(0, 5)));
        SolveStats stats;
        auto fast = solve_wildcard(csp, &stats);
        auto slow = oracle_wildcard(csp);
        REQUIRE(fast.cost == slow.cost);
        REQUIRE(total_cost(csp, fast.assignment) == fast.cost);

        const int rr = std::max(1, csp.max_arity());
        long long base = 1;
        for (int i = 0; i < rr; ++i) base *= q + 1;
        base -= 1;
        long long bound = 1;
        for (int i = 0; i < (n + rr - 1) / rr; ++i) bound *= base;
        REQUIRE(stats.leaves <= std::max(bound, 1LL));
    }
}

TEST_CASE("merging a nested constraint preserves the optimum") {
    Rng rng(44);
    for (int it = 0; it < 100; ++it) {
        const int n = static_cast<int>(rng.range(2, 6));
        const int q = static_cast<int>(rng.range(1, 2));
        WildcardCsp csp = random_monotone_csp(rng, n, q, 3, 2);
        if (csp.constraints.size() < 2) continue;
        // force one scope inside the other
        auto& small = csp.constraints[1];
        const auto& big = csp.constraints[0];
        if (small.scope.size() > big.scope.size()) continue;
        small.scope.assign(big.scope.begin(), big.scope.begin() + small.scope.size());
        // re-repair to keep sizes consistent
        WildcardCsp rebuilt = csp;
        auto before = oracle_wildcard(rebuilt).cost;
        auto after = solve_wildcard(rebuilt).cost;  // solver merges internally
        REQUIRE(before == after);
    }
}

TEST_CASE("wcsp text format round-trips") {
    Rng rng(55);
    WildcardCsp csp = random_monotone_csp(rng, 4, 2, 2, 3);
    const std::string text = serialize_wcsp(csp);
    WildcardCsp back = parse_wcsp(text);
    CHECK(back.var_count == csp.var_count);
    CHECK(back.q == csp.q);
    REQUIRE(back.constraints.size() == csp.constraints.size());
    for (std::size_t i = 0; i < csp.constraints.size(); ++i) {
        CHECK(back.constraints[i].scope == csp.constraints[i].scope);
        CHECK(back.constraints[i].table == csp.constraints[i].table);
    }
    CHECK(serialize_wcsp(back) == text);
    CHECK_THROWS_AS(parse_wcsp("wcsp 2\n"), parse_error);
}

TEST_CASE("vd reduction produces monotone tables and matching optima") {
    Rng rng(66);
    for (int it = 0; it < 100; ++it) {
        const int n = static_cast<int>(rng.range(1, 8));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.4)) edges.emplace_back(u, v);
        Graph g(n, edges);
        std::vector<int> q_set;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.5)) q_set.push_back(v);
        HubDecomposition h = validate_hub(g, q_set, n, n);
        const int q = static_cast<int>(rng.range(1, 3));
        ListAssignment l = ListAssignment::full(n, q);
        WildcardCsp csp = vd_to_wildcard_csp(g, l, h);
        CHECK(check_wildcard_property(csp));
        // spec example: path a-b-c, hub {b}, q=1 -> 1 variable, two unary
        // constraints, optimum 1
    }
    Graph p3 = parse_graph("p 3 2\ne 1 2\ne 2 3\n");
    HubDecomposition h = validate_hub(p3, {1}, 1, 1);
    WildcardCsp csp = vd_to_wildcard_csp(p3, ListAssignment::full(3, 1), h);
    CHECK(csp.var_count == 1);
    CHECK(csp.constraints.size() == 2);
    CHECK(solve_wildcard(csp).cost == 1);
}

TEST_CASE("components without hub neighbors become empty-scope constraints") {
    // two disjoint triangles, hub = one vertex of the first
    Graph g = parse_graph("p 6 6\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\n");
    HubDecomposition h = validate_hub(g, {0}, 3, 1);
    ListAssignment l = ListAssignment::full(6, 2);
    WildcardCsp csp = vd_to_wildcard_csp(g, l, h);
    bool found_empty = false;
    for (const auto& c : csp.constraints)
        if (c.scope.empty()) {
            found_empty = true;
            CHECK(c.table.size() == 1);
            CHECK(c.table[0] == 1);  // OCT of a free triangle
        }
    CHECK(found_empty);
}
