#include "hubsolve/maxcsp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hubsolve/errors.hpp"

namespace hubsolve {

int MaxCsp::max_arity() const {
    int r = 0;
    for (const auto& c : constraints) r = std::max(r, static_cast<int>(c.scope.size()));
    return r;
}

long long count_violations(const MaxCsp& inst, const std::vector<int>& assignment) {
    long long bad = 0;
    for (const auto& c : inst.constraints) {
        std::vector<int> t(c.scope.size());
        for (std::size_t i = 0; i < c.scope.size(); ++i) t[i] = assignment[c.scope[i]];
        if (!std::binary_search(c.relation.begin(), c.relation.end(), t)) ++bad;
    }
    return bad;
}

MaxCspResult oracle_maxcsp(const MaxCsp& inst) {
    long long total = 1;
    for (int i = 0; i < inst.var_count; ++i) {
        total *= inst.d;
        if (total > kOracleMaxCspCap)
            throw cap_error("InstanceTooLarge: d^n exceeds the Max-CSP oracle cap");
    }
    MaxCspResult best;
    best.violated = -1;
    std::vector<int> a(inst.var_count, 1);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = inst.var_count - 1; i >= 0; --i) {
            a[i] = static_cast<int>(t % inst.d) + 1;
            t /= inst.d;
        }
        long long bad = count_violations(inst, a);
        if (best.violated < 0 || bad < best.violated) {
            best.violated = bad;
            best.assignment = a;
        }
    }
    if (best.violated < 0) {
        best.assignment.clear();
        best.violated = count_violations(inst, {});
    }
    return best;
}

// --- Max 3-Sat ----------------------------------------------------------------

Cnf parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cnf cnf;
    int declared_clauses = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> cnf.var_count >> declared_clauses) || fmt != "cnf")
                throw parse_error("malformed 'p cnf' header");
            continue;
        }
        std::vector<int> clause;
        int lit;
        while (ls >> lit) {
            if (lit == 0) break;
            if (std::abs(lit) > cnf.var_count) throw parse_error("literal out of range");
            clause.push_back(lit);
        }
        cnf.clauses.push_back(std::move(clause));
    }
    if (declared_clauses >= 0 && declared_clauses != static_cast<int>(cnf.clauses.size()))
        throw parse_error("clause count mismatch");
    return cnf;
}

long long oracle_max3sat(const Cnf& cnf) {
    if (cnf.var_count > 24) throw cap_error("InstanceTooLarge: 2^n exceeds the SAT oracle cap");
    long long best = cnf.clauses.size() + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << cnf.var_count); ++mask) {
        long long bad = 0;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool val = (mask >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) ++bad;
        }
        best = std::min(best, bad);
    }
    return best;
}

MaxCsp group_sat(const Cnf& cnf, int p) {
    if (p < 1) throw validation_error("block size must be positive");
    for (const auto& clause : cnf.clauses)
        if (clause.size() > 3) throw validation_error("clauses must have at most 3 literals");

    int n = cnf.var_count;
    const int padded = (n + p - 1) / p * p;
    const int blocks = padded / p;

    MaxCsp out;
    out.var_count = blocks;
    out.d = 1 << p;

    // SAT variable v (1-based) lives in block (v-1)/p at bit (v-1)%p;
    // block value = 1 + sum of bits
    for (const auto& clause : cnf.clauses) {
        std::vector<int> scope;
        for (int lit : clause) scope.push_back((std::abs(lit) - 1) / p);
        std::sort(scope.begin(), scope.end());
        scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

        MaxCspConstraint c;
        c.scope = scope;
        const int k = static_cast<int>(scope.size());
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= out.d;
        std::vector<int> tuple(k);
        for (long long idx = 0; idx < total; ++idx) {
            long long t = idx;
            for (int i = 0; i < k; ++i) {
                tuple[i] = static_cast<int>(t % out.d) + 1;
                t /= out.d;
            }
            bool sat = false;
            for (int lit : clause) {
                const int var = std::abs(lit) - 1;
                const int block = var / p, bit = var % p;
                const int pos = static_cast<int>(
                    std::lower_bound(scope.begin(), scope.end(), block) - scope.begin());
                bool val = ((tuple[pos] - 1) >> bit) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (sat) c.relation.push_back(tuple);
        }
        std::sort(c.relation.begin(), c.relation.end());
        out.constraints.push_back(std::move(c));
    }
    // blocks made purely of padding variables never exist (padding < p),
    // except when the formula has zero variables
    return out;
}

// --- covering families ------------------------------------------------------------

namespace {

std::vector<std::vector<int>> subsets_of_size(int d_prime, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= d_prime; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// greedy set cover of [d']^m by products of d-subsets
std::vector<std::vector<std::vector<int>>> block_cover(int d_prime, int d, int m) {
    const auto combos = subsets_of_size(d_prime, d);
    long long candidates = 1, universe = 1;
    for (int i = 0; i < m; ++i) {
        candidates *= static_cast<long long>(combos.size());
        universe *= d_prime;
        if (candidates * universe > kBlockCoverCap)
            throw cap_error("BlockTooLarge: C(d',d)^m * d'^m exceeds the block cover cap");
    }

    std::vector<char> covered(universe, 0);
    long long remaining = universe;
    std::vector<std::vector<std::vector<int>>> picked;

    // tuple index: little-endian base-d' digits (values 1..d')
    auto member_digits = [&](long long cand, std::vector<const std::vector<int>*>& out_sets) {
        long long t = cand;
        for (int i = 0; i < m; ++i) {
            out_sets[i] = &combos[t % combos.size()];
            t /= static_cast<long long>(combos.size());
        }
    };

    std::vector<const std::vector<int>*> sets(m);
    std::vector<int> digit(m, 0);
    while (remaining > 0) {
        long long best_cand = -1, best_gain = -1;
        for (long long cand = 0; cand < candidates; ++cand) {
            member_digits(cand, sets);
            // walk every tuple of the product, count uncovered
            long long gain = 0;
            std::fill(digit.begin(), digit.end(), 0);
            while (true) {
                long long idx = 0, mul = 1;
                for (int i = 0; i < m; ++i) {
                    idx += static_cast<long long>((*sets[i])[digit[i]] - 1) * mul;
                    mul *= d_prime;
                }
                if (!covered[idx]) ++gain;
                int i = 0;
                for (; i < m; ++i) {
                    if (digit[i] + 1 < static_cast<int>(sets[i]->size())) {
                        ++digit[i];
                        break;
                    }
                    digit[i] = 0;
                }
                if (i == m) break;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_cand = cand;
            }
        }
        member_digits(best_cand, sets);
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            long long idx = 0, mul = 1;
            for (int i = 0; i < m; ++i) {
                idx += static_cast<long long>((*sets[i])[digit[i]] - 1) * mul;
                mul *= d_prime;
            }
            if (!covered[idx]) {
                covered[idx] = 1;
                --remaining;
            }
            int i = 0;
            for (; i < m; ++i) {
                if (digit[i] + 1 < static_cast<int>(sets[i]->size())) {
                    ++digit[i];
                    break;
                }
                digit[i] = 0;
            }
            if (i == m) break;
        }
        std::vector<std::vector<int>> member(m);
        for (int i = 0; i < m; ++i) member[i] = *sets[i];
        picked.push_back(std::move(member));
    }
    return picked;
}

}  // namespace

ProductCover covering_family(int d_prime, int d, int n, int m) {
    if (d < 1 || d > d_prime) throw validation_error("need 1 <= d <= d'");
    if (n < 1 || m < 1) throw validation_error("need n, m >= 1");

    // block sizes m, m, ..., with a smaller final block when m does not divide n
    std::vector<int> block_sizes;
    int left = n;
    while (left > 0) {
        block_sizes.push_back(std::min(m, left));
        left -= std::min(m, left);
    }
    std::map<int, std::vector<std::vector<std::vector<int>>>> covers;
    for (int bs : block_sizes)
        if (!covers.count(bs)) covers[bs] = block_cover(d_prime, d, bs);

    ProductCover out;
    out.d_prime = d_prime;
    out.d = d;
    out.n = n;

    // cartesian product over blocks
    std::vector<std::size_t> pick(block_sizes.size(), 0);
    while (true) {
        std::vector<std::vector<int>> member;
        member.reserve(n);
        for (std::size_t b = 0; b < block_sizes.size(); ++b) {
            const auto& bc = covers[block_sizes[b]][pick[b]];
            member.insert(member.end(), bc.begin(), bc.end());
        }
        out.members.push_back(std::move(member));
        std::size_t b = 0;
        for (; b < block_sizes.size(); ++b) {
            if (pick[b] + 1 < covers[block_sizes[b]].size()) {
                ++pick[b];
                break;
            }
            pick[b] = 0;
        }
        if (b == block_sizes.size()) break;
    }
    return out;
}

bool cover_is_complete(const ProductCover& cover) {
    long long universe = 1;
    for (int i = 0; i < cover.n; ++i) {
        universe *= cover.d_prime;
        if (universe > kBlockCoverCap)
            throw cap_error("InstanceTooLarge: d'^n exceeds the coverage check cap");
    }
    std::vector<char> hit(universe, 0);
    for (const auto& member : cover.members) {
        std::vector<int> digit(cover.n, 0);
        while (true) {
            long long idx = 0, mul = 1;
            for (int i = 0; i < cover.n; ++i) {
                idx += static_cast<long long>(member[i][digit[i]] - 1) * mul;
                mul *= cover.d_prime;
            }
            hit[idx] = 1;
            int i = 0;
            for (; i < cover.n; ++i) {
                if (digit[i] + 1 < static_cast<int>(member[i].size())) {
                    ++digit[i];
                    break;
                }
                digit[i] = 0;
            }
            if (i == cover.n) break;
        }
    }
    for (char h : hit)
        if (!h) return false;
    return true;
}

MaxCsp restrict_domains(const MaxCsp& inst, const std::vector<std::vector<int>>& member) {
    if (static_cast<int>(member.size()) != inst.var_count)
        throw validation_error("cover member does not match the variable count");
    MaxCsp out;
    out.var_count = inst.var_count;
    out.d = member.empty() ? inst.d : static_cast<int>(member[0].size());
    out.padding_vars = inst.padding_vars;
    for (const auto& c : inst.constraints) {
        MaxCspConstraint nc;
        nc.scope = c.scope;
        for (const auto& tuple : c.relation) {
            std::vector<int> mapped(tuple.size());
            bool inside = true;
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const auto& dom = member[c.scope[i]];
                auto it = std::lower_bound(dom.begin(), dom.end(), tuple[i]);
                if (it == dom.end() || *it != tuple[i]) {
                    inside = false;
                    break;
                }
                mapped[i] = static_cast<int>(it - dom.begin()) + 1;
            }
            if (inside) nc.relation.push_back(std::move(mapped));
        }
        std::sort(nc.relation.begin(), nc.relation.end());
        out.constraints.push_back(std::move(nc));  // empty relation = always violated
    }
    return out;
}

// --- structured split -----------------------------------------------------------

StructuredSplit::StructuredSplit(const MaxCsp& inst, int b) : b_(b) {
    if (b < 1) throw validation_error("block size must be positive");
    padded_ = inst;
    while (padded_.var_count % b != 0 || padded_.var_count == 0) {
        padded_.padding_vars.push_back(padded_.var_count);
        padded_.var_count += 1;
    }
    blocks_ = padded_.var_count / b;
    signature_.assign(blocks_, 0);
}

long long StructuredSplit::total_count() const {
    long long t = 1;
    for (int i = 0; i < blocks_; ++i) t *= b_ + 1;
    return t;
}

std::optional<MaxCsp> StructuredSplit::next() {
    if (done_) return std::nullopt;
    if (!first_) {
        int i = 0;
        for (; i < blocks_; ++i) {
            if (signature_[i] < b_) {
                ++signature_[i];
                break;
            }
            signature_[i] = 0;
        }
        if (i == blocks_) {
            done_ = true;
            return std::nullopt;
        }
    }
    first_ = false;
    return instantiate();
}

MaxCsp StructuredSplit::instantiate() const {
    MaxCsp out;
    out.var_count = padded_.var_count;
    out.d = padded_.d;
    out.padding_vars = padded_.padding_vars;

    auto block_of = [&](int v) { return v / b_; };
    auto block_vars = [&](int blk) {
        std::vector<int> vs(b_);
        for (int i = 0; i < b_; ++i) vs[i] = blk * b_ + i;
        return vs;
    };

    // enumerate all assignments of `scope` and keep those passing `pred`
    auto build_relation = [&](const std::vector<int>& scope, auto&& pred) {
        std::vector<std::vector<int>> rel;
        std::vector<int> tuple(scope.size(), 1);
        while (true) {
            if (pred(tuple)) rel.push_back(tuple);
            std::size_t i = 0;
            for (; i < tuple.size(); ++i) {
                if (tuple[i] < padded_.d) {
                    ++tuple[i];
                    break;
                }
                tuple[i] = 1;
            }
            if (i == tuple.size() || tuple.empty()) break;
        }
        std::sort(rel.begin(), rel.end());
        return rel;
    };

    // sign constraints: exactly f_i variables of block i take value d
    for (int blk = 0; blk < blocks_; ++blk) {
        MaxCspConstraint c;
        c.scope = block_vars(blk);
        c.relation = build_relation(c.scope, [&](const std::vector<int>& tuple) {
            int cnt = 0;
            for (int v : tuple)
                if (v == padded_.d) ++cnt;
            return cnt == signature_[blk];
        });
        out.constraints.push_back(std::move(c));
    }

    // strengthened constraints, merged per identical variable set
    std::map<std::vector<int>, std::vector<std::vector<int>>> merged;
    for (const auto& orig : padded_.constraints) {
        std::set<int> blks;
        for (int v : orig.scope) blks.insert(block_of(v));
        std::vector<int> scope;
        for (int blk : blks) {
            auto vs = block_vars(blk);
            scope.insert(scope.end(), vs.begin(), vs.end());
        }
        std::sort(scope.begin(), scope.end());
        auto rel = build_relation(scope, [&](const std::vector<int>& tuple) {
            // projection must satisfy the original constraint
            std::vector<int> proj(orig.scope.size());
            for (std::size_t i = 0; i < orig.scope.size(); ++i) {
                auto pos = std::lower_bound(scope.begin(), scope.end(), orig.scope[i]) -
                           scope.begin();
                proj[i] = tuple[pos];
            }
            if (!std::binary_search(orig.relation.begin(), orig.relation.end(), proj))
                return false;
            // every involved block carries exactly its signature count of d's
            for (int blk : blks) {
                int cnt = 0;
                for (int i = 0; i < b_; ++i) {
                    auto pos = std::lower_bound(scope.begin(), scope.end(), blk * b_ + i) -
                               scope.begin();
                    if (tuple[pos] == padded_.d) ++cnt;
                }
                if (cnt != signature_[blk]) return false;
            }
            return true;
        });
        auto it = merged.find(scope);
        if (it == merged.end()) {
            merged[scope] = std::move(rel);
        } else {
            // intersect the satisfying sets
            std::vector<std::vector<int>> inter;
            std::set_intersection(it->second.begin(), it->second.end(), rel.begin(), rel.end(),
                                  std::back_inserter(inter));
            it->second = std::move(inter);
        }
    }
    for (auto& [scope, rel] : merged) {
        MaxCspConstraint c;
        c.scope = scope;
        c.relation = std::move(rel);
        out.constraints.push_back(std::move(c));
    }
    return out;
}

// --- text format ------------------------------------------------------------------

MaxCsp parse_maxcsp(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    MaxCsp inst;
    if (!(in >> tag) || tag != "maxcsp") throw parse_error("missing 'maxcsp <n> <d>' header");
    if (!(in >> inst.var_count >> inst.d) || inst.var_count < 0 || inst.d < 1)
        throw parse_error("malformed maxcsp header");
    while (in >> tag) {
        if (tag != "c") throw parse_error("expected constraint record 'c'");
        int k;
        long long t;
        if (!(in >> k) || k < 0) throw parse_error("malformed arity");
        MaxCspConstraint c;
        for (int i = 0; i < k; ++i) {
            int v;
            if (!(in >> v) || v < 1 || v > inst.var_count)
                throw parse_error("constraint variable out of range");
            c.scope.push_back(v - 1);
        }
        if (!(in >> t) || t < 0) throw parse_error("malformed tuple count");
        for (long long j = 0; j < t; ++j) {
            std::vector<int> tuple(k);
            for (int i = 0; i < k; ++i) {
                if (!(in >> tuple[i]) || tuple[i] < 1 || tuple[i] > inst.d)
                    throw parse_error("tuple value out of range");
            }
            c.relation.push_back(std::move(tuple));
        }
        std::sort(c.relation.begin(), c.relation.end());
        c.relation.erase(std::unique(c.relation.begin(), c.relation.end()), c.relation.end());
        inst.constraints.push_back(std::move(c));
    }
    return inst;
}

std::string serialize_maxcsp(const MaxCsp& inst) {
    std::ostringstream out;
    out << "maxcsp " << inst.var_count << ' ' << inst.d << '\n';
    for (const auto& c : inst.constraints) {
        out << "c " << c.scope.size();
        for (int v : c.scope) out << ' ' << v + 1;
        out << ' ' << c.relation.size() << '\n';
        for (const auto& tuple : c.relation) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << tuple[i] << (i + 1 == tuple.size() ? '\n' : ' ');
            if (tuple.empty()) out << '\n';
        }
    }
    return out.str();
}

// --- generators ------------------------------------------------------------------

MaxCsp random_maxcsp(Rng& rng, int n, int d, int max_arity, int constraints) {
    MaxCsp inst;
    inst.var_count = n;
    inst.d = d;
    for (int i = 0; i < constraints; ++i) {
        MaxCspConstraint c;
        const int k = static_cast<int>(rng.range(1, std::min(max_arity, n)));
        std::vector<int> vars(n);
        for (int v = 0; v < n; ++v) vars[v] = v;
        rng.shuffle(vars);
        c.scope.assign(vars.begin(), vars.begin() + k);
        std::sort(c.scope.begin(), c.scope.end());
        long long total = 1;
        for (int j = 0; j < k; ++j) total *= d;
        std::vector<int> tuple(k);
        for (long long idx = 0; idx < total; ++idx) {
            long long t = idx;
            for (int j = 0; j < k; ++j) {
                tuple[j] = static_cast<int>(t % d) + 1;
                t /= d;
            }
            if (rng.chance(0.5)) c.relation.push_back(tuple);
        }
        std::sort(c.relation.begin(), c.relation.end());
        inst.constraints.push_back(std::move(c));
    }
    return inst;
}

Cnf random_cnf(Rng& rng, int n, int clauses) {
    Cnf cnf;
    cnf.var_count = n;
    for (int i = 0; i < clauses; ++i) {
        const int k = static_cast<int>(rng.range(1, 3));
        std::vector<int> vars(n);
        for (int v = 0; v < n; ++v) vars[v] = v + 1;
        rng.shuffle(vars);
        std::vector<int> clause;
        for (int j = 0; j < std::min(k, n); ++j)
            clause.push_back(rng.chance(0.5) ? vars[j] : -vars[j]);
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

}  // namespace hubsolve
