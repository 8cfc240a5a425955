#include "hubsolve/wildcard_csp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hubsolve/errors.hpp"

namespace hubsolve {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// decode position `pos` digit of table index
int digit_at(long long index, int pos, int radix) {
    return static_cast<int>(index / pow_ll(radix, pos) % radix);
}

}  // namespace

int WildcardCsp::max_arity() const {
    int r = 0;
    for (const auto& c : constraints) r = std::max(r, static_cast<int>(c.scope.size()));
    return r;
}

int WildcardAssignment::norm(int q) const {
    int n = 0;
    for (int v : values)
        if (v == q) ++n;
    return n;
}

long long total_cost(const WildcardCsp& csp, const WildcardAssignment& a) {
    const int radix = csp.q + 1;
    long long cost = 0;
    for (int v : a.values)
        if (v == csp.q) ++cost;
    for (const auto& c : csp.constraints) {
        long long idx = 0;
        for (std::size_t pos = 0; pos < c.scope.size(); ++pos)
            idx += static_cast<long long>(a.values[c.scope[pos]]) * pow_ll(radix, static_cast<int>(pos));
        cost += c.table[idx];
    }
    return cost;
}

bool check_wildcard_property(const WildcardCsp& csp) {
    const int radix = csp.q + 1;
    for (const auto& c : csp.constraints) {
        const int k = static_cast<int>(c.scope.size());
        // direct covers suffice: overwriting one value with x must not
        // increase the cost; chains follow by transitivity
        for (long long idx = 0; idx < static_cast<long long>(c.table.size()); ++idx) {
            for (int pos = 0; pos < k; ++pos) {
                int d = digit_at(idx, pos, radix);
                if (d == csp.q) continue;
                long long up = idx + static_cast<long long>(csp.q - d) * pow_ll(radix, pos);
                if (c.table[up] > c.table[idx]) return false;
            }
        }
    }
    return true;
}

// --- solver --------------------------------------------------------------

namespace {

struct LiveConstraint {
    std::vector<int> scope;  // global var ids, sorted
    std::vector<long long> table;
    long long seq;
};

struct SolverCtx {
    int q;
    int radix;
    int base_r;  // base-case threshold = max input arity
    long long leaves = 0;
    bool track_assignment;
};

struct SubResult {
    long long cost = 0;
    std::vector<std::pair<int, int>> assigned;  // (var, value)
    bool feasible = true;
};

long long table_index(const std::vector<int>& scope, const std::vector<int>& values,
                      int radix) {
    long long idx = 0, mul = 1;
    for (std::size_t pos = 0; pos < scope.size(); ++pos) {
        idx += static_cast<long long>(values[pos]) * mul;
        mul *= radix;
    }
    return idx;
}

// restrict `c` by fixing the variables in `fixed_scope` to `fixed_vals`
LiveConstraint restrict_constraint(const LiveConstraint& c, const std::vector<int>& fixed_scope,
                                   const std::vector<int>& fixed_vals, int radix) {
    LiveConstraint out;
    out.seq = c.seq;
    std::vector<int> keep_pos, fixed_pos, fixed_digit;
    for (std::size_t pos = 0; pos < c.scope.size(); ++pos) {
        auto it = std::lower_bound(fixed_scope.begin(), fixed_scope.end(), c.scope[pos]);
        if (it != fixed_scope.end() && *it == c.scope[pos]) {
            fixed_pos.push_back(static_cast<int>(pos));
            fixed_digit.push_back(fixed_vals[it - fixed_scope.begin()]);
        } else {
            keep_pos.push_back(static_cast<int>(pos));
            out.scope.push_back(c.scope[pos]);
        }
    }
    const long long sz = pow_ll(radix, static_cast<int>(out.scope.size()));
    out.table.resize(sz);
    for (long long idx = 0; idx < sz; ++idx) {
        long long full = 0;
        for (std::size_t i = 0; i < keep_pos.size(); ++i)
            full += static_cast<long long>(digit_at(idx, static_cast<int>(i), radix)) *
                    pow_ll(radix, keep_pos[i]);
        for (std::size_t i = 0; i < fixed_pos.size(); ++i)
            full += static_cast<long long>(fixed_digit[i]) * pow_ll(radix, fixed_pos[i]);
        out.table[idx] = c.table[full];
    }
    return out;
}

SubResult solve_rec(SolverCtx& ctx, std::vector<int> vars,
                    std::vector<LiveConstraint> constraints) {
    const int radix = ctx.radix;
    long long offset = 0;
    std::vector<std::pair<int, int>> forced;  // rule-assigned variables

    while (true) {
        // fold empty scopes into the offset
        for (auto it = constraints.begin(); it != constraints.end();) {
            if (it->scope.empty()) {
                offset += it->table[0];
                it = constraints.erase(it);
            } else {
                ++it;
            }
        }

        // rule 2: merge C' into C whenever scope(C') is a subset of scope(C)
        bool merged = true;
        while (merged) {
            merged = false;
            for (std::size_t i = 0; i < constraints.size() && !merged; ++i) {
                for (std::size_t j = 0; j < constraints.size() && !merged; ++j) {
                    if (i == j) continue;
                    const auto& small = constraints[j].scope;
                    const auto& big = constraints[i].scope;
                    if (small.size() > big.size()) continue;
                    if (small.size() == big.size() && j < i) continue;  // equal sets merge into the earlier
                    if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                        continue;
                    // positions of small inside big
                    std::vector<int> pos(small.size());
                    for (std::size_t k = 0; k < small.size(); ++k)
                        pos[k] = static_cast<int>(
                            std::lower_bound(big.begin(), big.end(), small[k]) - big.begin());
                    auto& btab = constraints[i].table;
                    const auto& stab = constraints[j].table;
                    for (long long idx = 0; idx < static_cast<long long>(btab.size()); ++idx) {
                        long long sidx = 0;
                        for (std::size_t k = 0; k < small.size(); ++k)
                            sidx += static_cast<long long>(digit_at(idx, pos[k], radix)) *
                                    pow_ll(radix, static_cast<int>(k));
                        btab[idx] += stab[sidx];
                    }
                    constraints.erase(constraints.begin() + static_cast<long>(j));
                    merged = true;
                }
            }
        }

        // rule 1: drop variables in no scope (any fixed value, pick color 1)
        std::vector<char> used(ctx.q, 0);
        std::vector<int> in_scope;
        for (const auto& c : constraints)
            in_scope.insert(in_scope.end(), c.scope.begin(), c.scope.end());
        std::sort(in_scope.begin(), in_scope.end());
        std::vector<int> kept;
        for (int v : vars) {
            if (std::binary_search(in_scope.begin(), in_scope.end(), v))
                kept.push_back(v);
            else if (ctx.track_assignment)
                forced.emplace_back(v, 0);
        }
        vars = std::move(kept);

        // base case
        if (static_cast<int>(vars.size()) <= ctx.base_r) {
            ++ctx.leaves;
            SubResult res;
            res.cost = offset;
            if (vars.empty()) {
                res.assigned = std::move(forced);
                return res;
            }
            const int nv = static_cast<int>(vars.size());
            const long long total = pow_ll(radix, nv);
            long long best = -1;
            std::vector<int> best_vals;
            std::vector<int> vals(nv);
            for (long long idx = 0; idx < total; ++idx) {
                for (int i = 0; i < nv; ++i) vals[i] = digit_at(idx, i, radix);
                long long cost = 0;
                for (int v : vals)
                    if (v == ctx.q) ++cost;
                for (const auto& c : constraints) {
                    std::vector<int> cv(c.scope.size());
                    for (std::size_t k = 0; k < c.scope.size(); ++k) {
                        int p = static_cast<int>(
                            std::lower_bound(vars.begin(), vars.end(), c.scope[k]) - vars.begin());
                        cv[k] = vals[p];
                    }
                    cost += c.table[table_index(c.scope, cv, radix)];
                }
                if (best < 0 || cost < best) {
                    best = cost;
                    best_vals = vals;
                }
            }
            res.cost = offset + best;
            if (ctx.track_assignment) {
                res.assigned = std::move(forced);
                for (int i = 0; i < nv; ++i) res.assigned.emplace_back(vars[i], best_vals[i]);
            }
            return res;
        }

        // pick the constraint of maximum scope size, ties by first appearance
        std::size_t pick = 0;
        for (std::size_t i = 1; i < constraints.size(); ++i) {
            if (constraints[i].scope.size() > constraints[pick].scope.size() ||
                (constraints[i].scope.size() == constraints[pick].scope.size() &&
                 constraints[i].seq < constraints[pick].seq))
                pick = i;
        }
        LiveConstraint C = constraints[pick];
        constraints.erase(constraints.begin() + static_cast<long>(pick));

        const long long cdel = C.table.back();  // all-wildcard entry
        bool all_equal = true;
        for (long long e : C.table)
            if (e != cdel) {
                all_equal = false;
                break;
            }
        if (all_equal) {
            // case a: drop C and keep its constant
            offset += cdel;
            continue;
        }

        // case b: witness f' with cost >= cdel+1 and maximum norm, ties by
        // encoding order; f = f' with its first non-wildcard position erased
        const int k = static_cast<int>(C.scope.size());
        long long fprime = -1;
        int fprime_norm = -1;
        for (long long idx = 0; idx < static_cast<long long>(C.table.size()); ++idx) {
            if (C.table[idx] < cdel + 1) continue;
            int norm = 0;
            for (int pos = 0; pos < k; ++pos)
                if (digit_at(idx, pos, radix) == ctx.q) ++norm;
            if (norm > fprime_norm) {
                fprime_norm = norm;
                fprime = idx;
            }
        }
        int flip = -1;
        for (int pos = 0; pos < k; ++pos)
            if (digit_at(fprime, pos, radix) != ctx.q) {
                flip = pos;
                break;
            }
        const long long f =
            fprime + static_cast<long long>(ctx.q - digit_at(fprime, flip, radix)) *
                         pow_ll(radix, flip);
        // witness validity (spec invariant): f' < f and cost(f)+|f| <= cost(f')+|f'|
        if (!(C.table[f] + (fprime_norm + 1) <= C.table[fprime] + fprime_norm))
            throw validation_error("case-b witness invalid");

        // branch over every assignment of C except f'
        std::vector<int> rest_vars;
        for (int v : vars)
            if (!std::binary_search(C.scope.begin(), C.scope.end(), v)) rest_vars.push_back(v);

        SubResult best;
        best.feasible = false;
        std::vector<int> gvals(k);
        for (long long g = 0; g < static_cast<long long>(C.table.size()); ++g) {
            if (g == fprime) continue;
            int gnorm = 0;
            for (int pos = 0; pos < k; ++pos) {
                gvals[pos] = digit_at(g, pos, radix);
                if (gvals[pos] == ctx.q) ++gnorm;
            }
            std::vector<LiveConstraint> sub;
            sub.reserve(constraints.size());
            for (const auto& other : constraints)
                sub.push_back(restrict_constraint(other, C.scope, gvals, radix));
            SubResult r = solve_rec(ctx, rest_vars, std::move(sub));
            r.cost += C.table[g] + gnorm;
            if (!best.feasible || r.cost < best.cost) {
                best = std::move(r);
                best.feasible = true;
                if (ctx.track_assignment)
                    for (int pos = 0; pos < k; ++pos)
                        best.assigned.emplace_back(C.scope[pos], gvals[pos]);
            }
        }
        best.cost += offset;
        if (ctx.track_assignment)
            best.assigned.insert(best.assigned.end(), forced.begin(), forced.end());
        return best;
    }
}

}  // namespace

WildcardResult solve_wildcard(const WildcardCsp& csp, SolveStats* stats) {
    if (!check_wildcard_property(csp))
        throw validation_error("WildcardPropertyViolated");
    SolverCtx ctx;
    ctx.q = csp.q;
    ctx.radix = csp.q + 1;
    ctx.base_r = std::max(1, csp.max_arity());
    ctx.track_assignment = true;

    std::vector<int> vars(csp.var_count);
    for (int i = 0; i < csp.var_count; ++i) vars[i] = i;
    std::vector<LiveConstraint> cs;
    cs.reserve(csp.constraints.size());
    for (const auto& c : csp.constraints) cs.push_back({c.scope, c.table, c.seq});

    SubResult r = solve_rec(ctx, std::move(vars), std::move(cs));
    if (stats) stats->leaves = ctx.leaves;

    WildcardResult out;
    out.cost = r.cost;
    out.assignment.values.assign(csp.var_count, 0);
    for (auto [v, val] : r.assigned) out.assignment.values[v] = val;
    return out;
}

WildcardResult oracle_wildcard(const WildcardCsp& csp) {
    const int radix = csp.q + 1;
    long long total = 1;
    for (int i = 0; i < csp.var_count; ++i) {
        total *= radix;
        if (total > kOracleWildcardCap)
            throw cap_error("InstanceTooLarge: (q+1)^n exceeds the oracle cap");
    }
    WildcardResult best;
    best.cost = -1;
    WildcardAssignment a;
    a.values.assign(csp.var_count, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        // lexicographic order: earlier variables are more significant
        for (int i = csp.var_count - 1; i >= 0; --i) {
            a.values[i] = static_cast<int>(t % radix);
            t /= radix;
        }
        long long cost = total_cost(csp, a);
        if (best.cost < 0 || cost < best.cost) {
            best.cost = cost;
            best.assignment = a;
        }
    }
    if (best.cost < 0) {  // zero variables
        best.cost = total_cost(csp, best.assignment);
    }
    return best;
}

// --- reduction from vertex-deletion list coloring -------------------------

namespace {

// min deletions inside component `comp` extending the boundary state;
// assignment[v]: -1 unknown, 0 deleted, 1..q color
int component_vd_cost(const Graph& g, const ListAssignment& l, const std::vector<int>& comp,
                      std::vector<int>& assignment, std::size_t at, int budget_used,
                      int best_known) {
    if (budget_used >= best_known) return best_known;
    if (at == comp.size()) return budget_used;
    const int v = comp[at];
    int best = best_known;
    for (int c : l.lists[v]) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (assignment[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        assignment[v] = c;
        best = component_vd_cost(g, l, comp, assignment, at + 1, budget_used, best);
        assignment[v] = -1;
    }
    assignment[v] = 0;
    best = component_vd_cost(g, l, comp, assignment, at + 1, budget_used + 1, best);
    assignment[v] = -1;
    return best;
}

}  // namespace

WildcardCsp vd_to_wildcard_csp(const Graph& g, const ListAssignment& l,
                               const HubDecomposition& h) {
    for (int v : h.hub)
        if (l.lists[v].empty())
            throw validation_error("hub vertex " + std::to_string(v + 1) +
                                   " has an empty list; delete it before reducing");
    const int q = l.q;
    const int radix = q + 1;
    WildcardCsp csp;
    csp.q = q;
    csp.var_count = h.p();

    std::vector<int> var_of(g.n(), -1);
    for (int i = 0; i < h.p(); ++i) var_of[h.hub[i]] = i;

    long long seq = 0;
    // decode helper: value j in 0..q-1 maps hub vertex x to its list entry
    // rho(j) = list[j mod |list|]; value q deletes x
    auto decode = [&](int hub_vertex, int value) -> int {
        if (value == q) return 0;
        const auto& lst = l.lists[hub_vertex];
        return lst[static_cast<std::size_t>(value) % lst.size()];
    };

    std::vector<int> assignment(g.n(), -1);
    for (std::size_t ci = 0; ci < h.components.size(); ++ci) {
        const auto& comp = h.components[ci];
        const auto& nbhd = h.neighborhoods[ci];
        WildcardConstraint c;
        c.seq = seq++;
        for (int x : nbhd) c.scope.push_back(var_of[x]);
        std::sort(c.scope.begin(), c.scope.end());
        const int k = static_cast<int>(c.scope.size());
        long long sz = 1;
        for (int i = 0; i < k; ++i) sz *= radix;
        c.table.resize(sz);
        std::vector<int> scope_vertices(k);
        for (int i = 0; i < k; ++i) scope_vertices[i] = h.hub[c.scope[i]];
        for (long long idx = 0; idx < sz; ++idx) {
            long long t = idx;
            for (int i = 0; i < k; ++i) {
                assignment[scope_vertices[i]] = decode(scope_vertices[i], static_cast<int>(t % radix));
                t /= radix;
            }
            c.table[idx] = component_vd_cost(g, l, comp, assignment, 0, 0,
                                             static_cast<int>(comp.size()) + 1);
            for (int i = 0; i < k; ++i) assignment[scope_vertices[i]] = -1;
        }
        csp.constraints.push_back(std::move(c));
    }

    // hub-internal edges: monochromatic non-deleted endpoints are penalized
    // beyond any feasible optimum, so optima coincide with the graph problem
    const long long penalty = g.n() + 1;
    for (auto [u, v] : g.edges()) {
        if (var_of[u] < 0 || var_of[v] < 0) continue;
        WildcardConstraint c;
        c.seq = seq++;
        c.scope = {var_of[u], var_of[v]};
        if (c.scope[0] > c.scope[1]) std::swap(c.scope[0], c.scope[1]);
        const int a = h.hub[c.scope[0]], b = h.hub[c.scope[1]];
        c.table.assign(static_cast<std::size_t>(radix) * radix, 0);
        for (int x = 0; x < radix; ++x)
            for (int y = 0; y < radix; ++y) {
                if (x == q || y == q) continue;
                if (decode(a, x) == decode(b, y))
                    c.table[static_cast<std::size_t>(y) * radix + x] = penalty;
            }
        csp.constraints.push_back(std::move(c));
    }
    return csp;
}

// --- text format -----------------------------------------------------------

WildcardCsp parse_wcsp(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    WildcardCsp csp;
    if (!(in >> tag) || tag != "wcsp") throw parse_error("missing 'wcsp <n> <q>' header");
    if (!(in >> csp.var_count >> csp.q) || csp.var_count < 0 || csp.q < 1)
        throw parse_error("malformed wcsp header");
    long long seq = 0;
    while (in >> tag) {
        if (tag != "c") throw parse_error("expected constraint record 'c', got '" + tag + "'");
        int k;
        if (!(in >> k) || k < 0) throw parse_error("malformed constraint arity");
        WildcardConstraint c;
        c.seq = seq++;
        for (int i = 0; i < k; ++i) {
            int v;
            if (!(in >> v) || v < 1 || v > csp.var_count)
                throw parse_error("constraint variable out of range");
            c.scope.push_back(v - 1);
        }
        std::sort(c.scope.begin(), c.scope.end());
        long long sz = 1;
        for (int i = 0; i < k; ++i) sz *= csp.q + 1;
        c.table.resize(sz);
        for (long long i = 0; i < sz; ++i)
            if (!(in >> c.table[i]) || c.table[i] < 0)
                throw parse_error("bad or missing table value");
        csp.constraints.push_back(std::move(c));
    }
    return csp;
}

std::string serialize_wcsp(const WildcardCsp& csp) {
    std::ostringstream out;
    out << "wcsp " << csp.var_count << ' ' << csp.q << '\n';
    for (const auto& c : csp.constraints) {
        out << "c " << c.scope.size();
        for (int v : c.scope) out << ' ' << v + 1;
        out << '\n';
        for (std::size_t i = 0; i < c.table.size(); ++i)
            out << c.table[i] << (i + 1 == c.table.size() ? '\n' : ' ');
        if (c.table.empty()) out << '\n';
    }
    return out.str();
}

}  // namespace hubsolve
