#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hubsolve/graph.hpp"
#include "hubsolve/maxcsp.hpp"

namespace hubsolve {

/// Graph with color lists over [q] and an ordered portal tuple.
struct Gadget {
    Graph graph;
    ListAssignment lists;
    std::vector<int> portals;  // distinct; builders keep them independent
};

struct Relation {
    int q = 2;
    int r = 0;
    std::vector<std::vector<int>> tuples;  // sorted, deduplicated

    bool contains(const std::vector<int>& t) const;
    static Relation full(int q, int r);
    long long tuple_space() const;  // q^r
};

inline constexpr long long kCostInf = 1LL << 50;
inline constexpr long long kEliminationWidthCap = 1LL << 22;

/// Minimum edge deletions so that the gadget admits a proper list coloring
/// with the portals pinned to `d` (equivalently: the minimum number of
/// improper edges over list-respecting colorings). Exact min-sum variable
/// elimination; kCostInf when no list coloring exists at all.
long long cost_ed(const Gadget& gad, const std::vector<int>& d);

/// Minimum improper-edge count over unrestricted q-colorings of a plain
/// graph (the Max Cut complement for q=2). Same engine, no lists pinned.
long long min_improper_coloring(const Graph& g, int q);

struct RealizationReport {
    bool realizes = false;
    long long k = 0;           // common in-relation cost
    bool omega_uniform = false;  // all out-of-relation costs equal k+omega
    long long omega = 0;
    std::vector<std::pair<std::vector<int>, long long>> costs;  // full profile
};

/// Computes cost_ed for all q^r portal tuples and classifies the gadget
/// against R (Def. 5.1 semantics, omega-realization included).
RealizationReport verify_realization(const Gadget& gad, const Relation& R);

/// Decision-style contract: portals pinned to d extend with zero deletions
/// iff d is in R. For externally supplied q >= 3 gadgets.
bool verify_extension_gadget(const Gadget& gad, const Relation& R);

// --- q=2 constructions ------------------------------------------------------

Gadget build_or2();                  // 5-cycle, one {2}-list vertex; costs 1 / 3
Gadget build_or2_pow(int omega);     // omega copies on shared portals
Gadget build_or(int p);              // OR_p；p >= 2 (p == 2 is the 5-cycle)
Gadget build_forbid(const std::vector<int>& d);  // realizes [2]^p minus {d}
Gadget build_relation(const Relation& R);        // conjunction over excluded tuples
Gadget build_one_realizer(const Relation& R, int omega);

/// omega disjoint copies sharing the (independent) portal set.
Gadget stack_copies(const Gadget& gad, int omega);

// --- Max Cut synthesis --------------------------------------------------------

struct MaxCutInstance {
    Graph graph;
    long long budget = 0;     // z' = z + sum(alpha_i)
    long long threshold = 0;  // |E| - z'; Max Cut >= threshold iff optimum <= z
    std::vector<int> hub;     // Y plus the apex
};

/// Variable vertices, one 1-realizer per constraint, then list removal
/// through an apex vertex with parallel 3- and 4-vertex paths.
MaxCutInstance build_maxcut_instance(const MaxCsp& inst, long long z);

/// Exact Max Cut: 2^(n-1) enumeration for n <= 20, otherwise the
/// elimination engine on |E| - min improper edges.
long long oracle_maxcut(const Graph& g);

// --- files ---------------------------------------------------------------------

/// Graph format plus `q <q>`, `portal <v1> <v2> ...` and `list <v>: ...`.
Gadget parse_gadget(const std::string& text);
std::string serialize_gadget(const Gadget& gad);

/// `rel <q> <r> <count>` then count lines of r values.
Relation parse_relation(const std::string& text);
std::string serialize_relation(const Relation& rel);

}  // namespace hubsolve
