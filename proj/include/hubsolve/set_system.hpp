#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hubsolve/rng.hpp"

namespace hubsolve {

enum class SetVariant {
    CoverEq,
    CoverLe,
    PartitionEq,
    PartitionLe,
    PartitionLeSets,
    PackingEqSets,
    PackingLeSets,
    PackingLeUnion,
};

const char* variant_tag(SetVariant v);
SetVariant variant_from_tag(const std::string& tag);
bool variant_has_target(SetVariant v);

/// Universe 1..n, sets as bitmasks (element e = bit e-1). Families are
/// deduplicated sorted lists.
struct SetSystem {
    int n = 0;
    std::vector<std::uint64_t> sets;
    SetVariant variant = SetVariant::CoverLe;
    int d = 1;
    std::optional<long long> t;

    std::uint64_t universe_mask() const {
        return n == 64 ? ~0ULL : (1ULL << n) - 1;
    }
    void normalize();  // sort + dedup + recompute nothing else
};

/// Checks the variant's size constraint and, for cover/partition variants,
/// that the family covers the universe. Throws validation_error.
void validate_set_system(const SetSystem& s);

struct SetOracleResult {
    bool yes = false;
    long long opt = -1;  // min sets (cover/partition) or max sets/union (packing)
};

inline constexpr int kSetOracleCap = 20;

/// Exact subset-DP oracle over 2^n masks.
SetOracleResult oracle_set(const SetSystem& s, int cap = kSetOracleCap);

/// Independent cross-check: enumerates all subfamilies (|F| <= 20).
SetOracleResult naive_oracle_set(const SetSystem& s);

// exact helpers shared with the triangle module
long long min_cover(int n, const std::vector<std::uint64_t>& sets);      // -1 if impossible
long long min_partition(int n, const std::vector<std::uint64_t>& sets);  // -1 if impossible
long long max_disjoint_sets(int n, const std::vector<std::uint64_t>& sets);
long long max_disjoint_union(int n, const std::vector<std::uint64_t>& sets);
/// max #disjoint sets whose union contains `required`; -1 if impossible
long long max_disjoint_sets_covering(int n, const std::vector<std::uint64_t>& sets,
                                     std::uint64_t required);

// --- reduction web (Fig. 2) -------------------------------------------------

struct EmittedInstance {
    SetSystem sys;
    std::vector<long long> signature;  // emitting signature, empty when n/a
};

/// Single-consumer lazy stream of emitted instances.
class InstanceStream {
public:
    explicit InstanceStream(std::function<std::optional<EmittedInstance>()> fn)
        : fn_(std::move(fn)) {}
    std::optional<EmittedInstance> next() { return fn_(); }

private:
    std::function<std::optional<EmittedInstance>()> fn_;
};

/// Lemma "cover to partition": F' = all nonempty subsets of members.
SetSystem reduce_cover_to_partition_sets(const SetSystem& cover_le);

/// Lemma "packing union to partition": one instance per signature
/// x in {0..b}^{n/b} with sum(x) <= n - t; target t + n/b.
InstanceStream reduce_packing_union_to_partition_sets(const SetSystem& packing_le_union, int b);

/// Size signature r = (r_1..r_d), r_i <= |F_i|, sum r_i <= n.
struct SizeSignature {
    std::vector<long long> r;  // index i-1 counts size-i sets

    long long weight() const;
};

bool signature_valid(const SetSystem& s, const SizeSignature& r);

/// Join instance of (U, F) for signature r and constant c: uniform set
/// size c*d!+1 with dummy blocks, guard elements and target alpha_r.
struct JoinInstance {
    SetSystem sys;             // family F_r over U_r (variant set by caller)
    int n_original = 0;
    long long alpha_r = 0;
    int h = 0;                 // uniform set size c*d!+1
    std::uint64_t dummy_mask = 0;
    std::uint64_t guard_mask = 0;
};

inline constexpr long long kJoinUnionCap = 1'000'000;

JoinInstance build_join_instance(const SetSystem& base, int c, const SizeSignature& r);

InstanceStream reduce_partition_sets_to_partition(const SetSystem& partition_le_sets, int c);
InstanceStream reduce_partition_to_eq_partition(const SetSystem& partition_le, int c);
InstanceStream reduce_packing_sets_to_eq_packing(const SetSystem& packing_le_sets, int c);

/// Mod-3 padding: partition-eq with set size d becomes set size 3d.
SetSystem pad_partition_mod3(const SetSystem& partition_eq);

/// Identity-shaped wrappers (Obs. 7.1-7.3), keyed by name for pipelines:
/// cover-eq-to-cover-le, packing-eq-to-packing-le, packing-eq-to-union,
/// partition-eq-to-packing-eq, partition-eq-to-cover-eq.
using SimpleReduction = std::function<SetSystem(const SetSystem&)>;
const std::vector<std::pair<std::string, SimpleReduction>>& trivial_injections();

// --- text format ----------------------------------------------------------------

/// `u <n>`, lines `s <e1> <e2> ...`, optional `t <target>`, `variant <tag>`,
/// optional `d <bound>` (defaults to the largest set size).
SetSystem parse_set_system(const std::string& text);
std::string serialize_set_system(const SetSystem& s);

// seeded generator shared by tests and selfcheck
SetSystem random_set_system(Rng& rng, int n, int max_sets, int max_size, SetVariant variant);

/// All families over [n] with at most max_sets nonempty distinct sets,
/// deduplicated up to universe relabeling; set sizes capped by max_size.
std::vector<std::vector<std::uint64_t>> enumerate_families_up_to_iso(int n, int max_sets,
                                                                     int max_size);

}  // namespace hubsolve
