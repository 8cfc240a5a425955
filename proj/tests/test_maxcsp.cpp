#include "doctest.h"

#include <algorithm>

#include "hubsolve/errors.hpp"
#include "hubsolve/maxcsp.hpp"
#include "hubsolve/rng.hpp"

using namespace hubsolve;

TEST_CASE("oracle_maxcsp basics") {
    // two contradictory unary constraints on one variable
    MaxCsp inst;
    inst.var_count = 1;
    inst.d = 2;
    inst.constraints.push_back({{0}, {{1}}});
    inst.constraints.push_back({{0}, {{2}}});
    CHECK(oracle_maxcsp(inst).violated == 1);

    inst.constraints.pop_back();
    CHECK(oracle_maxcsp(inst).violated == 0);
}

TEST_CASE("group_sat preserves the optimum exactly") {
    // single clause (x or not y), p = 2, both variables in one block
    Cnf cnf;
    cnf.var_count = 2;
    cnf.clauses.push_back({1, -2});
    MaxCsp grouped = group_sat(cnf, 2);
    CHECK(grouped.var_count == 1);
    CHECK(grouped.d == 4);
    REQUIRE(grouped.constraints.size() == 1);
    CHECK(grouped.constraints[0].relation.size() == 3);  // of the 4 valuations
    CHECK(oracle_maxcsp(grouped).violated == 0);

    Cnf empty;
    empty.var_count = 3;
    CHECK(group_sat(empty, 2).constraints.empty());

    Rng rng(77);
    for (int it = 0; it < 200; ++it) {
        const int n = static_cast<int>(rng.range(1, 8));
        Cnf f = random_cnf(rng, n, static_cast<int>(rng.range(0, 10)));
        const long long direct = oracle_max3sat(f);
        for (int p : {1, 2, 3}) {
            MaxCsp g = group_sat(f, p);
            CHECK(g.max_arity() <= 3);
            REQUIRE(oracle_maxcsp(g).violated == direct);
        }
    }
}

TEST_CASE("covering_family covers the cube within the size bound") {
    // d'=2, d=1, n=1: the two singletons
    ProductCover tiny = covering_family(2, 1, 1, 1);
    CHECK(tiny.members.size() == 2);
    CHECK(cover_is_complete(tiny));

    // d'=4, d=3, n=1: a 2-member cover
    ProductCover two = covering_family(4, 3, 1, 1);
    CHECK(two.members.size() == 2);
    CHECK(cover_is_complete(two));

    // d'=3, d=2, n=4, m=2: exhaustive 81-tuple scan
    ProductCover mid = covering_family(3, 2, 4, 2);
    CHECK(cover_is_complete(mid));
    CHECK(static_cast<double>(mid.members.size()) <= std::pow(3.0 / 2.0 + 1.0, 4));

    for (int d_prime = 2; d_prime <= 4; ++d_prime)
        for (int d = 1; d < d_prime; ++d)
            for (int n = 1; n <= 6; ++n)
                for (int m : {1, 2}) {
                    ProductCover pc = covering_family(d_prime, d, n, m);
                    CHECK(cover_is_complete(pc));
                    if (m == 1) {
                        double bound = std::pow(static_cast<double>(d_prime) / d + 1.0, n);
                        CHECK(static_cast<double>(pc.members.size()) <= bound);
                    }
                }
}

TEST_CASE("restrict_domains preserves the optimum through the cover") {
    // identity case d = d'
    Rng rng(88);
    MaxCsp inst = random_maxcsp(rng, 4, 3, 2, 4);
    std::vector<std::vector<int>> identity(4, std::vector<int>{1, 2, 3});
    MaxCsp same = restrict_domains(inst, identity);
    CHECK(oracle_maxcsp(same).violated == oracle_maxcsp(inst).violated);

    for (int it = 0; it < 60; ++it) {
        const int n = static_cast<int>(rng.range(1, 5));
        MaxCsp orig = random_maxcsp(rng, n, 3, 3, static_cast<int>(rng.range(1, 5)));
        const long long opt = oracle_maxcsp(orig).violated;
        ProductCover cover = covering_family(3, 2, n, 1);
        long long best = -1;
        for (const auto& member : cover.members) {
            MaxCsp restricted = restrict_domains(orig, member);
            const long long v = oracle_maxcsp(restricted).violated;
            if (best < 0 || v < best) best = v;
        }
        REQUIRE(best == opt);
    }
}

TEST_CASE("a relation emptied by restriction is always violated") {
    MaxCsp inst;
    inst.var_count = 2;
    inst.d = 3;
    inst.constraints.push_back({{0, 1}, {{3, 3}}});
    MaxCsp restricted = restrict_domains(inst, {{1, 2}, {1, 2}});
    CHECK(restricted.constraints[0].relation.empty());
    CHECK(oracle_maxcsp(restricted).violated == 1);
}

TEST_CASE("structured_split yields (b+1)^(n/b) instances and preserves satisfiability") {
    Rng rng(99);
    // n = b: one block, b+1 instances
    {
        MaxCsp inst = random_maxcsp(rng, 3, 2, 2, 2);
        StructuredSplit split(inst, 3);
        int count = 0;
        while (split.next()) ++count;
        CHECK(count == 4);
        CHECK(split.total_count() == 4);
    }
    for (int it = 0; it < 120; ++it) {
        const int n = static_cast<int>(rng.range(1, 6));
        MaxCsp inst = random_maxcsp(rng, n, 2, 2, static_cast<int>(rng.range(0, 5)));
        const bool sat = oracle_maxcsp(inst).violated == 0;
        StructuredSplit split(inst, 2);
        bool any = false;
        long long yields = 0;
        while (auto em = split.next()) {
            ++yields;
            if (oracle_maxcsp(*em).violated == 0) any = true;
        }
        REQUIRE(yields == split.total_count());
        REQUIRE(any == sat);
    }
}

TEST_CASE("maxcsp text format round-trips") {
    Rng rng(111);
    MaxCsp inst = random_maxcsp(rng, 4, 3, 3, 3);
    const std::string text = serialize_maxcsp(inst);
    MaxCsp back = parse_maxcsp(text);
    CHECK(back.var_count == inst.var_count);
    CHECK(back.d == inst.d);
    CHECK(serialize_maxcsp(back) == text);
    CHECK_THROWS_AS(parse_maxcsp("maxcsp 2\n"), parse_error);

    Cnf cnf = parse_dimacs_cnf("c comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
    CHECK(cnf.var_count == 3);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0] == std::vector<int>{1, -2});
}
