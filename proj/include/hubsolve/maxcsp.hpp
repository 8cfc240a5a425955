#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hubsolve/rng.hpp"

namespace hubsolve {

/// Relational constraint: `relation` holds the satisfying tuples, values
/// 1..d, coordinate order given by `scope`.
struct MaxCspConstraint {
    std::vector<int> scope;
    std::vector<std::vector<int>> relation;  // sorted, deduplicated
};

/// Max-(d,r)-CSP deletion variant: minimize the number of violated
/// constraints.
struct MaxCsp {
    int var_count = 0;
    int d = 0;
    std::vector<MaxCspConstraint> constraints;
    std::vector<int> padding_vars;  // "free" variables added by reductions

    int max_arity() const;
};

struct MaxCspResult {
    std::vector<int> assignment;  // values 1..d
    long long violated = 0;
};

long long count_violations(const MaxCsp& inst, const std::vector<int>& assignment);

inline constexpr long long kOracleMaxCspCap = 1LL << 24;

/// Exact minimum violations by full enumeration (lexicographically-least
/// optimal assignment).
MaxCspResult oracle_maxcsp(const MaxCsp& inst);

// --- Max 3-Sat ------------------------------------------------------------

struct Cnf {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals, nonzero
};

Cnf parse_dimacs_cnf(const std::string& text);
long long oracle_max3sat(const Cnf& cnf);  // min violated clauses, 2^n scan

/// Blocks of p boolean variables become one variable over [2^p]; every
/// clause (arity <= 3) becomes one constraint of arity <= 3 whose relation
/// holds exactly the satisfying block valuations. Minimum violations are
/// preserved exactly.
MaxCsp group_sat(const Cnf& cnf, int p);

// --- product covering families ----------------------------------------------

/// Family of products D_1 x ... x D_n with D_i in C([d'], d) covering [d']^n.
struct ProductCover {
    int d_prime = 0;
    int d = 0;
    int n = 0;
    std::vector<std::vector<std::vector<int>>> members;  // member -> n sorted D_i's
};

inline constexpr long long kBlockCoverCap = 1LL << 24;

/// Greedy block cover of [d']^m, then the product across ceil(n/m) blocks
/// (last block smaller when m does not divide n).
ProductCover covering_family(int d_prime, int d, int n, int m);

/// Exhaustive coverage check; caps at d'^n <= 2^24.
bool cover_is_complete(const ProductCover& cover);

/// Relabels each D_i to [d] and filters relations to tuples inside the
/// product. Optima whose preimage lies in the product are preserved.
MaxCsp restrict_domains(const MaxCsp& inst, const std::vector<std::vector<int>>& member);

// --- signature-structured satisfiability split --------------------------------

/// One (b,f)-structured instance per signature f in {0..b}^{n/b}; the input
/// is satisfiable iff some emitted instance is (0 violations).
class StructuredSplit {
public:
    StructuredSplit(const MaxCsp& inst, int b);

    /// Next instance, or nullopt when the signature space is exhausted.
    std::optional<MaxCsp> next();
    const std::vector<int>& last_signature() const { return signature_; }
    long long total_count() const;  // (b+1)^{n/b}

private:
    MaxCsp padded_;
    int b_;
    int blocks_;
    std::vector<int> signature_;
    bool first_ = true;
    bool done_ = false;

    MaxCsp instantiate() const;
};

// --- text formats ---------------------------------------------------------------

/// `maxcsp <n> <d>` then `c <k> <vars...> <t>` followed by t tuples.
MaxCsp parse_maxcsp(const std::string& text);
std::string serialize_maxcsp(const MaxCsp& inst);

// --- seeded generators (shared by tests and selfcheck) ---------------------------

MaxCsp random_maxcsp(Rng& rng, int n, int d, int max_arity, int constraints);
Cnf random_cnf(Rng& rng, int n, int clauses);

}  // namespace hubsolve
