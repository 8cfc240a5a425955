#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hubsolve/coloring.hpp"
#include "hubsolve/graph.hpp"

namespace hubsolve {

/// Values are encoded 0..q-1 for colors 1..q and q for the wildcard.
inline constexpr int kWildcard = -1;  // only used in pretty-printing

struct WildcardConstraint {
    std::vector<int> scope;        // sorted variable ids
    std::vector<long long> table;  // (q+1)^|scope| entries, mixed radix,
                                   // scope[0] least significant, value order 1..q then x
    long long seq = 0;             // stable id, first-appearance tie-break
};

/// (q,r)-CSP-with-Wildcard instance. Constraints form a multiset.
struct WildcardCsp {
    int var_count = 0;
    int q = 0;
    std::vector<WildcardConstraint> constraints;

    int max_arity() const;
};

struct WildcardAssignment {
    std::vector<int> values;  // 0..q-1 color, q = wildcard

    int norm(int q) const;
};

long long total_cost(const WildcardCsp& csp, const WildcardAssignment& a);

/// Exhaustive monotonicity check over every constraint table.
bool check_wildcard_property(const WildcardCsp& csp);

struct WildcardResult {
    WildcardAssignment assignment;
    long long cost = 0;
};

/// Branch-and-reduce solver; leaf count at most ((q+1)^r - 1)^ceil(n/r).
/// Throws validation_error("WildcardPropertyViolated") when the
/// precondition check fails.
WildcardResult solve_wildcard(const WildcardCsp& csp, SolveStats* stats = nullptr);

inline constexpr long long kOracleWildcardCap = 1LL << 24;

/// Full enumeration; returns the lexicographically-least optimal assignment.
WildcardResult oracle_wildcard(const WildcardCsp& csp);

/// Reduction from vertex-deletion list coloring (one variable per hub
/// vertex, one constraint per component, plus one penalty constraint per
/// hub-internal edge). Every hub vertex must have a nonempty list.
WildcardCsp vd_to_wildcard_csp(const Graph& g, const ListAssignment& l,
                               const HubDecomposition& h);

// text format: `wcsp <n> <q>` then per constraint `c <k> <v1..vk>`
// followed by (q+1)^k table values in encoding order.
WildcardCsp parse_wcsp(const std::string& text);
std::string serialize_wcsp(const WildcardCsp& csp);

}  // namespace hubsolve
