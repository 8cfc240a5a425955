#include "hubsolve/set_system.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "hubsolve/errors.hpp"

namespace hubsolve {

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

long long factorial(int d) {
    long long f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

}  // namespace

const char* variant_tag(SetVariant v) {
    switch (v) {
        case SetVariant::CoverEq: return "cover-eq";
        case SetVariant::CoverLe: return "cover-le";
        case SetVariant::PartitionEq: return "partition-eq";
        case SetVariant::PartitionLe: return "partition-le";
        case SetVariant::PartitionLeSets: return "partition-le-sets";
        case SetVariant::PackingEqSets: return "packing-eq-sets";
        case SetVariant::PackingLeSets: return "packing-le-sets";
        case SetVariant::PackingLeUnion: return "packing-le-union";
    }
    return "?";
}

SetVariant variant_from_tag(const std::string& tag) {
    for (SetVariant v :
         {SetVariant::CoverEq, SetVariant::CoverLe, SetVariant::PartitionEq,
          SetVariant::PartitionLe, SetVariant::PartitionLeSets, SetVariant::PackingEqSets,
          SetVariant::PackingLeSets, SetVariant::PackingLeUnion})
        if (tag == variant_tag(v)) return v;
    throw parse_error("unknown variant tag '" + tag + "'");
}

bool variant_has_target(SetVariant v) {
    return v != SetVariant::PartitionEq && v != SetVariant::PartitionLe;
}

void SetSystem::normalize() {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void validate_set_system(const SetSystem& s) {
    if (s.n < 0 || s.n > 62) throw validation_error("universe size out of range");
    const bool eq_size = s.variant == SetVariant::CoverEq || s.variant == SetVariant::PartitionEq ||
                         s.variant == SetVariant::PackingEqSets;
    std::uint64_t uni = 0;
    for (auto set : s.sets) {
        if (set & ~s.universe_mask()) throw validation_error("set element out of range");
        const int size = popcount(set);
        if (eq_size && size != s.d)
            throw validation_error("variant requires sets of size exactly d");
        if (!eq_size && size > s.d) throw validation_error("set exceeds the size bound d");
        uni |= set;
    }
    const bool needs_cover = s.variant == SetVariant::CoverEq || s.variant == SetVariant::CoverLe ||
                             s.variant == SetVariant::PartitionEq ||
                             s.variant == SetVariant::PartitionLe ||
                             s.variant == SetVariant::PartitionLeSets;
    if (needs_cover && uni != s.universe_mask())
        throw validation_error("cover/partition variants require the family to cover U");
    if (variant_has_target(s.variant) && !s.t)
        throw validation_error("variant requires a target t");
}

// --- mask DP helpers ---------------------------------------------------------

namespace {

std::vector<std::vector<std::uint64_t>> sets_by_lowbit(int n,
                                                       const std::vector<std::uint64_t>& sets) {
    std::vector<std::vector<std::uint64_t>> by(n);
    for (auto s : sets) {
        if (s == 0) continue;
        for (int e = 0; e < n; ++e)
            if ((s >> e) & 1) by[e].push_back(s);
    }
    return by;
}

}  // namespace

long long min_cover(int n, const std::vector<std::uint64_t>& sets) {
    const std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);
    if (full == 0) return 0;
    auto by = sets_by_lowbit(n, sets);
    const std::size_t size = 1ULL << n;
    std::vector<int> dp(size, -1);
    dp[0] = 0;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const int e = std::countr_zero(mask);
        int best = -1;
        for (auto s : by[e]) {
            const int sub = dp[mask & ~s];
            if (sub >= 0 && (best < 0 || sub + 1 < best)) best = sub + 1;
        }
        dp[mask] = best;
    }
    return dp[full];
}

long long min_partition(int n, const std::vector<std::uint64_t>& sets) {
    const std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);
    if (full == 0) return 0;
    auto by = sets_by_lowbit(n, sets);
    const std::size_t size = 1ULL << n;
    std::vector<int> dp(size, -1);
    dp[0] = 0;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const int e = std::countr_zero(mask);
        int best = -1;
        for (auto s : by[e]) {
            if ((s & mask) != s) continue;
            const int sub = dp[mask & ~s];
            if (sub >= 0 && (best < 0 || sub + 1 < best)) best = sub + 1;
        }
        dp[mask] = best;
    }
    return dp[full];
}

namespace {

// shared max-packing DP; value(s) is the gain of picking set s
template <typename Value>
long long packing_dp(int n, const std::vector<std::uint64_t>& sets, Value&& value) {
    const std::size_t size = n == 0 ? 1 : (1ULL << n);
    auto by = sets_by_lowbit(n, sets);
    std::vector<long long> dp(size, 0);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const int e = std::countr_zero(mask);
        long long best = dp[mask & (mask - 1)];  // leave element e unused
        for (auto s : by[e]) {
            if ((s & mask) != s) continue;
            best = std::max(best, value(s) + dp[mask & ~s]);
        }
        dp[mask] = best;
    }
    return dp[size - 1];
}

}  // namespace

long long max_disjoint_sets(int n, const std::vector<std::uint64_t>& sets) {
    long long empties = std::count(sets.begin(), sets.end(), 0ULL);
    return empties + packing_dp(n, sets, [](std::uint64_t) { return 1LL; });
}

long long max_disjoint_union(int n, const std::vector<std::uint64_t>& sets) {
    return packing_dp(n, sets, [](std::uint64_t s) { return static_cast<long long>(popcount(s)); });
}

long long max_disjoint_sets_covering(int n, const std::vector<std::uint64_t>& sets,
                                     std::uint64_t required) {
    // dp over masks: best #sets whose union is a superset of (required & mask)
    const std::size_t size = n == 0 ? 1 : (1ULL << n);
    auto by = sets_by_lowbit(n, sets);
    std::vector<long long> dp(size, -1);
    dp[0] = std::count(sets.begin(), sets.end(), 0ULL);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const int e = std::countr_zero(mask);
        long long best = -1;
        if (!((required >> e) & 1)) {
            best = dp[mask & (mask - 1)];
        }
        for (auto s : by[e]) {
            if ((s & mask) != s) continue;
            const long long sub = dp[mask & ~s];
            if (sub >= 0) best = std::max(best, sub + 1);
        }
        dp[mask] = best;
    }
    return dp[size - 1];
}

SetOracleResult oracle_set(const SetSystem& s, int cap) {
    if (s.n > cap)
        throw cap_error("InstanceTooLarge: set-system oracle supports n <= " + std::to_string(cap));
    SetOracleResult r;
    const std::uint64_t full = s.universe_mask();
    std::uint64_t uni = 0;
    for (auto set : s.sets) uni |= set;

    switch (s.variant) {
        case SetVariant::CoverEq:
        case SetVariant::CoverLe:
            r.opt = (uni == full) ? min_cover(s.n, s.sets) : -1;
            r.yes = r.opt >= 0 && s.t && r.opt <= *s.t;
            break;
        case SetVariant::PartitionEq:
        case SetVariant::PartitionLe:
            r.opt = (uni == full) ? min_partition(s.n, s.sets) : -1;
            r.yes = r.opt >= 0;
            break;
        case SetVariant::PartitionLeSets:
            r.opt = (uni == full) ? min_partition(s.n, s.sets) : -1;
            r.yes = r.opt >= 0 && s.t && r.opt <= *s.t;
            break;
        case SetVariant::PackingEqSets:
        case SetVariant::PackingLeSets:
            r.opt = max_disjoint_sets(s.n, s.sets);
            r.yes = s.t && r.opt >= *s.t;
            break;
        case SetVariant::PackingLeUnion:
            r.opt = max_disjoint_union(s.n, s.sets);
            r.yes = s.t && r.opt >= *s.t;
            break;
    }
    return r;
}

SetOracleResult naive_oracle_set(const SetSystem& s) {
    if (s.sets.size() > 20)
        throw cap_error("InstanceTooLarge: naive oracle supports |F| <= 20");
    const std::uint64_t full = s.universe_mask();
    const std::size_t m = s.sets.size();
    SetOracleResult r;
    const bool packing = s.variant == SetVariant::PackingEqSets ||
                         s.variant == SetVariant::PackingLeSets ||
                         s.variant == SetVariant::PackingLeUnion;
    const bool cover = s.variant == SetVariant::CoverEq || s.variant == SetVariant::CoverLe;
    for (std::uint64_t pick = 0; pick < (1ULL << m); ++pick) {
        std::uint64_t uni = 0;
        bool disjoint = true;
        long long count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!((pick >> i) & 1)) continue;
            if (uni & s.sets[i]) disjoint = false;
            uni |= s.sets[i];
            ++count;
        }
        if (cover) {
            if (uni == full && (r.opt < 0 || count < r.opt)) r.opt = count;
        } else if (packing) {
            if (!disjoint) continue;
            long long value = s.variant == SetVariant::PackingLeUnion
                                  ? static_cast<long long>(popcount(uni))
                                  : count;
            r.opt = std::max(r.opt, value);
        } else {
            if (disjoint && uni == full && (r.opt < 0 || count < r.opt)) r.opt = count;
        }
    }
    if (packing) r.opt = std::max(r.opt, 0LL);
    switch (s.variant) {
        case SetVariant::CoverEq:
        case SetVariant::CoverLe:
        case SetVariant::PartitionLeSets:
            r.yes = r.opt >= 0 && s.t && r.opt <= *s.t;
            break;
        case SetVariant::PartitionEq:
        case SetVariant::PartitionLe:
            r.yes = r.opt >= 0;
            break;
        default:
            r.yes = s.t && r.opt >= *s.t;
            break;
    }
    return r;
}

// --- reductions ----------------------------------------------------------------

SetSystem reduce_cover_to_partition_sets(const SetSystem& cover_le) {
    SetSystem out;
    out.n = cover_le.n;
    out.variant = SetVariant::PartitionLeSets;
    out.d = cover_le.d;
    out.t = cover_le.t;
    std::set<std::uint64_t> subs;
    for (auto s : cover_le.sets) {
        // all nonempty subsets of s
        for (std::uint64_t sub = s; sub != 0; sub = (sub - 1) & s) subs.insert(sub);
    }
    out.sets.assign(subs.begin(), subs.end());
    return out;
}

InstanceStream reduce_packing_union_to_partition_sets(const SetSystem& packing_le_union, int b) {
    if (b < 1) throw validation_error("block size must be positive");
    if (!packing_le_union.t) throw validation_error("packing-le-union requires a target");

    struct State {
        SetSystem base;
        int b = 1;
        int n_padded = 0;
        int blocks = 0;
        long long t = 0;
        std::vector<long long> x;
        bool first = true;
        bool done = false;

        bool advance() {
            int i = 0;
            for (; i < blocks; ++i) {
                if (x[i] < b) {
                    ++x[i];
                    break;
                }
                x[i] = 0;
            }
            return i < blocks;
        }

        std::optional<EmittedInstance> step() {
            while (!done) {
                if (!first) {
                    if (!advance()) {
                        done = true;
                        break;
                    }
                }
                first = false;
                long long sum = 0;
                for (long long xi : x) sum += xi;
                // the signature of a hypothetical solution: union >= t means
                // at most n_padded - t elements stay uncovered, and padding
                // elements (never in any set) always count as uncovered
                const int pad = n_padded - base.n;
                if (sum > n_padded - t) continue;
                if (pad > 0 && x[blocks - 1] < pad) continue;

                EmittedInstance em;
                em.signature = x;
                SetSystem& out = em.sys;
                out.n = n_padded + blocks;  // elements a_i appended
                out.variant = SetVariant::PartitionLeSets;
                out.d = std::max(base.d, b + 1);
                out.t = t + blocks;
                out.sets = base.sets;
                for (int i = 0; i < blocks; ++i) {
                    // every S subset of U_i with |S| = x_i, plus marker a_i
                    std::uint64_t block_mask = 0;
                    for (int e = i * b; e < (i + 1) * b; ++e) block_mask |= 1ULL << e;
                    const std::uint64_t marker = 1ULL << (n_padded + i);
                    std::uint64_t sub = block_mask;
                    while (true) {
                        if (popcount(sub) == x[i]) out.sets.push_back(sub | marker);
                        if (sub == 0) break;
                        sub = (sub - 1) & block_mask;
                    }
                }
                out.normalize();
                return em;
            }
            return std::nullopt;
        }
    };
    auto st = std::make_shared<State>();
    st->base = packing_le_union;
    st->b = b;
    st->n_padded = (packing_le_union.n + b - 1) / b * b;
    if (st->n_padded == 0) st->n_padded = b;
    st->blocks = st->n_padded / b;
    st->t = *packing_le_union.t;
    st->x.assign(st->blocks, 0);

    return InstanceStream([st]() { return st->step(); });
}

long long SizeSignature::weight() const {
    long long w = 0;
    for (long long ri : r) w += ri;
    return w;
}

bool signature_valid(const SetSystem& s, const SizeSignature& sig) {
    if (static_cast<int>(sig.r.size()) != s.d) return false;
    std::vector<long long> avail(s.d, 0);
    for (auto set : s.sets) {
        const int size = popcount(set);
        if (size >= 1 && size <= s.d) ++avail[size - 1];
    }
    long long total = 0;
    for (int i = 0; i < s.d; ++i) {
        if (sig.r[i] < 0 || sig.r[i] > avail[i]) return false;
        total += sig.r[i];
    }
    return total <= s.n;
}

JoinInstance build_join_instance(const SetSystem& base, int c, const SizeSignature& sig) {
    if (c < 1) throw validation_error("c must be positive");
    if (!signature_valid(base, sig)) throw validation_error("invalid F-signature");
    const int d = base.d;
    const long long cd = c * factorial(d);

    // partition the family by set size
    std::vector<std::vector<std::uint64_t>> f_by_size(d + 1);
    for (auto s : base.sets) {
        const int size = popcount(s);
        if (size >= 1 && size <= d) f_by_size[size].push_back(s);
    }

    JoinInstance out;
    out.n_original = base.n;
    out.h = static_cast<int>(cd + 1);

    int next_elem = base.n;  // next fresh element (0-based bit)
    std::vector<std::vector<std::uint64_t>> adds(d + 1);
    std::vector<long long> r_prime(d + 1, 0);

    for (int i = 1; i <= d; ++i) {
        if (sig.r[i - 1] == 0) continue;
        const long long a_i = cd / i;
        const long long s_i = (sig.r[i - 1] + a_i - 1) / a_i * a_i;
        r_prime[i] = s_i / a_i;
        for (long long j = 0; j < s_i - sig.r[i - 1]; ++j) {
            std::uint64_t dummy = 0;
            for (int e = 0; e < i; ++e) {
                if (next_elem >= 62) throw cap_error("CombinatorialBlowup: join universe too big");
                dummy |= 1ULL << next_elem++;
            }
            adds[i].push_back(dummy);
            out.dummy_mask |= dummy;
        }
    }
    // guard elements e^i_j
    std::vector<std::vector<int>> guards(d + 1);
    for (int i = 1; i <= d; ++i) {
        for (long long j = 0; j < r_prime[i]; ++j) {
            if (next_elem >= 62) throw cap_error("CombinatorialBlowup: join universe too big");
            guards[i].push_back(next_elem);
            out.guard_mask |= 1ULL << next_elem++;
        }
        out.alpha_r += r_prime[i];
    }

    out.sys.n = next_elem;
    out.sys.d = out.h;
    out.sys.variant = base.variant;

    // unions of a_i pairwise disjoint sets from F_i + adds
    for (int i = 1; i <= d; ++i) {
        if (sig.r[i - 1] == 0) continue;
        const long long a_i = cd / i;
        std::vector<std::uint64_t> pool = f_by_size[i];
        pool.insert(pool.end(), adds[i].begin(), adds[i].end());
        std::vector<std::uint64_t> unions;
        std::vector<std::uint64_t> chosen;
        long long produced = 0;
        std::function<void(std::size_t, std::uint64_t, long long)> rec =
            [&](std::size_t from, std::uint64_t used, long long left) {
                if (left == 0) {
                    unions.push_back(used);
                    if (++produced > kJoinUnionCap)
                        throw cap_error("CombinatorialBlowup: join union enumeration cap hit");
                    return;
                }
                for (std::size_t k = from; k < pool.size(); ++k) {
                    if (pool[k] & used) continue;
                    rec(k + 1, used | pool[k], left - 1);
                }
            };
        rec(0, 0, a_i);
        for (int g : guards[i])
            for (auto u : unions) out.sys.sets.push_back(u | (1ULL << g));
    }
    out.sys.normalize();
    return out;
}

namespace {

struct SignatureStreamState {
    SetSystem base;
    int c = 1;
    std::vector<long long> avail;
    SizeSignature sig;
    bool first = true;
    bool done = false;
    std::function<bool(const SizeSignature&)> keep;
    std::function<EmittedInstance(const JoinInstance&, const SizeSignature&)> emit;

    bool advance() {
        int i = 0;
        for (; i < base.d; ++i) {
            if (sig.r[i] < avail[i]) {
                ++sig.r[i];
                break;
            }
            sig.r[i] = 0;
        }
        return i < base.d;
    }

    std::optional<EmittedInstance> step() {
        while (!done) {
            if (!first) {
                if (!advance()) {
                    done = true;
                    break;
                }
            }
            first = false;
            if (sig.weight() > base.n) continue;
            if (!keep(sig)) continue;
            JoinInstance j = build_join_instance(base, c, sig);
            return emit(j, sig);
        }
        return std::nullopt;
    }
};

// stream over all F-signatures passing `keep`, mapped through `emit`
InstanceStream signature_stream(const SetSystem& base, int c,
                                std::function<bool(const SizeSignature&)> keep,
                                std::function<EmittedInstance(const JoinInstance&,
                                                              const SizeSignature&)> emit) {
    auto st = std::make_shared<SignatureStreamState>();
    st->base = base;
    st->c = c;
    st->keep = std::move(keep);
    st->emit = std::move(emit);
    st->avail.assign(base.d, 0);
    for (auto set : base.sets) {
        const int size = popcount(set);
        if (size >= 1 && size <= base.d) ++st->avail[size - 1];
    }
    st->sig.r.assign(base.d, 0);
    return InstanceStream([st]() { return st->step(); });
}

}  // namespace

InstanceStream reduce_partition_sets_to_partition(const SetSystem& partition_le_sets, int c) {
    if (!partition_le_sets.t) throw validation_error("partition-le-sets requires a target");
    const long long t = *partition_le_sets.t;
    return signature_stream(
        partition_le_sets, c,
        [t](const SizeSignature& sig) { return sig.weight() <= t; },
        [](const JoinInstance& j, const SizeSignature& sig) {
            EmittedInstance em;
            em.sys = j.sys;
            em.sys.variant = SetVariant::PartitionLe;
            em.sys.t.reset();
            em.signature = sig.r;
            return em;
        });
}

InstanceStream reduce_partition_to_eq_partition(const SetSystem& partition_le, int c) {
    return signature_stream(
        partition_le, c, [](const SizeSignature&) { return true; },
        [](const JoinInstance& j, const SizeSignature& sig) {
            EmittedInstance em;
            em.sys = j.sys;
            em.sys.variant = SetVariant::PartitionEq;
            em.sys.t.reset();
            em.signature = sig.r;
            return em;
        });
}

InstanceStream reduce_packing_sets_to_eq_packing(const SetSystem& packing_le_sets, int c) {
    if (!packing_le_sets.t) throw validation_error("packing-le-sets requires a target");
    const long long t = *packing_le_sets.t;
    return signature_stream(
        packing_le_sets, c,
        [t](const SizeSignature& sig) { return sig.weight() >= t; },
        [](const JoinInstance& j, const SizeSignature& sig) {
            EmittedInstance em;
            em.sys = j.sys;
            em.sys.variant = SetVariant::PackingEqSets;
            em.sys.t = j.alpha_r;
            em.signature = sig.r;
            return em;
        });
}

SetSystem pad_partition_mod3(const SetSystem& partition_eq) {
    if (partition_eq.variant != SetVariant::PartitionEq)
        throw validation_error("pad_partition_mod3 expects a partition-eq instance");
    const int d = partition_eq.d;
    const int n = partition_eq.n;
    const long long s = (d > 0 && n % d == 0) ? (n / d) % 3 : 0;
    const long long extra = 3 - s;

    SetSystem padded = partition_eq;
    std::vector<std::uint64_t> family = partition_eq.sets;
    int next_elem = n;
    for (long long j = 0; j < extra; ++j) {
        std::uint64_t dummy = 0;
        for (int e = 0; e < d; ++e) {
            if (next_elem >= 62) throw cap_error("CombinatorialBlowup: mod-3 padding too big");
            dummy |= 1ULL << next_elem++;
        }
        family.push_back(dummy);
    }

    SetSystem out;
    out.n = next_elem;
    out.variant = SetVariant::PartitionEq;
    out.d = 3 * d;
    // unions of 3 pairwise disjoint members
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            if (family[a] & family[b]) continue;
            for (std::size_t e = b + 1; e < family.size(); ++e) {
                if ((family[a] | family[b]) & family[e]) continue;
                out.sets.push_back(family[a] | family[b] | family[e]);
            }
        }
    out.normalize();
    return out;
}

const std::vector<std::pair<std::string, SimpleReduction>>& trivial_injections() {
    static const std::vector<std::pair<std::string, SimpleReduction>> table = {
        {"cover-eq-to-cover-le",
         [](const SetSystem& s) {
             SetSystem out = s;
             out.variant = SetVariant::CoverLe;
             return out;
         }},
        {"packing-eq-to-packing-le",
         [](const SetSystem& s) {
             SetSystem out = s;
             out.variant = SetVariant::PackingLeSets;
             return out;
         }},
        {"packing-eq-to-union",
         [](const SetSystem& s) {
             SetSystem out = s;
             out.variant = SetVariant::PackingLeUnion;
             out.t = s.t ? std::optional<long long>(*s.t * s.d) : std::nullopt;
             return out;
         }},
        {"partition-eq-to-packing-eq",
         [](const SetSystem& s) {
             SetSystem out = s;
             out.variant = SetVariant::PackingEqSets;
             // ceil: when d does not divide n the packing target must stay
             // unreachable, matching the trivially-NO partition
             out.t = s.d > 0 ? (s.n + s.d - 1) / s.d : 0;
             return out;
         }},
        {"partition-eq-to-cover-eq",
         [](const SetSystem& s) {
             SetSystem out = s;
             out.variant = SetVariant::CoverEq;
             out.t = s.d > 0 ? s.n / s.d : 0;
             return out;
         }},
    };
    return table;
}

// --- text format -----------------------------------------------------------------

SetSystem parse_set_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    SetSystem s;
    bool have_n = false, have_variant = false, have_d = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "u") {
            if (!(ls >> s.n) || s.n < 0 || s.n > 62)
                throw parse_error("line " + std::to_string(lineno) + ": bad universe size");
            have_n = true;
        } else if (tag == "s") {
            if (!have_n) throw parse_error("line " + std::to_string(lineno) + ": set before 'u'");
            std::uint64_t mask = 0;
            int e;
            while (ls >> e) {
                if (e < 1 || e > s.n)
                    throw parse_error("line " + std::to_string(lineno) + ": element out of range");
                mask |= 1ULL << (e - 1);
            }
            s.sets.push_back(mask);
        } else if (tag == "t") {
            long long t;
            if (!(ls >> t)) throw parse_error("line " + std::to_string(lineno) + ": bad target");
            s.t = t;
        } else if (tag == "variant") {
            std::string v;
            if (!(ls >> v)) throw parse_error("line " + std::to_string(lineno) + ": bad variant");
            s.variant = variant_from_tag(v);
            have_variant = true;
        } else if (tag == "d") {
            if (!(ls >> s.d) || s.d < 0)
                throw parse_error("line " + std::to_string(lineno) + ": bad size bound");
            have_d = true;
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
    }
    if (!have_n) throw parse_error("missing 'u <n>' record");
    if (!have_variant) throw parse_error("missing 'variant <tag>' record");
    if (!have_d) {
        s.d = 1;
        for (auto set : s.sets) s.d = std::max(s.d, popcount(set));
    }
    s.normalize();
    return s;
}

std::string serialize_set_system(const SetSystem& s) {
    std::ostringstream out;
    out << "u " << s.n << '\n';
    out << "variant " << variant_tag(s.variant) << '\n';
    out << "d " << s.d << '\n';
    if (s.t) out << "t " << *s.t << '\n';
    for (auto set : s.sets) {
        out << 's';
        for (int e = 0; e < s.n + 2 && e < 62; ++e)
            if ((set >> e) & 1) out << ' ' << e + 1;
        out << '\n';
    }
    return out.str();
}

// --- generators --------------------------------------------------------------------

SetSystem random_set_system(Rng& rng, int n, int max_sets, int max_size, SetVariant variant) {
    SetSystem s;
    s.n = n;
    s.variant = variant;
    const bool eq_size = variant == SetVariant::CoverEq || variant == SetVariant::PartitionEq ||
                         variant == SetVariant::PackingEqSets;
    s.d = eq_size ? std::max(1, static_cast<int>(rng.range(1, std::min(max_size, n))))
                  : std::min(max_size, std::max(1, n));
    const int count = static_cast<int>(rng.range(1, max_sets));
    for (int i = 0; i < count; ++i) {
        const int size =
            eq_size ? s.d : static_cast<int>(rng.range(1, std::min(s.d, std::max(1, n))));
        std::vector<int> elems(n);
        for (int e = 0; e < n; ++e) elems[e] = e;
        rng.shuffle(elems);
        std::uint64_t mask = 0;
        for (int j = 0; j < std::min(size, n); ++j) mask |= 1ULL << elems[j];
        if (mask) s.sets.push_back(mask);
    }
    s.normalize();

    const bool needs_cover = variant == SetVariant::CoverEq || variant == SetVariant::CoverLe ||
                             variant == SetVariant::PartitionEq ||
                             variant == SetVariant::PartitionLe ||
                             variant == SetVariant::PartitionLeSets;
    if (needs_cover) {
        // top up with singletons / d-sets until the universe is covered
        std::uint64_t uni = 0;
        for (auto set : s.sets) uni |= set;
        for (int e = 0; e < n; ++e) {
            if ((uni >> e) & 1) continue;
            std::uint64_t mask = 1ULL << e;
            if (eq_size) {
                // greedily extend to size d with arbitrary elements
                for (int f = 0; f < n && popcount(mask) < s.d; ++f) mask |= 1ULL << f;
                mask |= 1ULL << e;
            }
            s.sets.push_back(mask);
            uni |= mask;
        }
        s.normalize();
    }
    if (variant_has_target(variant)) s.t = rng.range(0, std::max(1, n));
    return s;
}

std::vector<std::vector<std::uint64_t>> enumerate_families_up_to_iso(int n, int max_sets,
                                                                     int max_size) {
    if (n > 6) throw cap_error("InstanceTooLarge: family enumeration supports n <= 6");
    // usable sets
    std::vector<std::uint64_t> pool;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask)
        if (popcount(mask) <= max_size) pool.push_back(mask);

    // permutations of [n]
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto apply = [&](std::uint64_t mask, const std::vector<int>& p) {
        std::uint64_t out = 0;
        for (int e = 0; e < n; ++e)
            if ((mask >> e) & 1) out |= 1ULL << p[e];
        return out;
    };

    std::set<std::vector<std::uint64_t>> canon;
    std::vector<std::uint64_t> family;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        // canonical form: lexicographically-least permuted sorted family
        std::vector<std::uint64_t> best;
        for (const auto& p : perms) {
            std::vector<std::uint64_t> mapped;
            mapped.reserve(family.size());
            for (auto m : family) mapped.push_back(apply(m, p));
            std::sort(mapped.begin(), mapped.end());
            if (best.empty() || mapped < best) best = mapped;
        }
        canon.insert(best);
        if (static_cast<int>(family.size()) == max_sets) return;
        for (std::size_t k = from; k < pool.size(); ++k) {
            family.push_back(pool[k]);
            rec(k + 1);
            family.pop_back();
        }
    };
    rec(0);
    return {canon.begin(), canon.end()};
}

}  // namespace hubsolve
