#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hubsolve/graph.hpp"

namespace hubsolve {

/// Result of a coloring-type solve. `assignment[v]` is a color in [q],
/// or 0 when v was deleted (vd) / left uncolored.
struct ColoringSolution {
    std::vector<int> assignment;
    std::vector<int> deleted_vertices;
    std::vector<std::pair<int, int>> deleted_edges;
    long long cost = 0;
};

struct SolveStats {
    long long leaves = 0;  // recursion-tree leaves of branching solvers
};

// --- witness checks (asserted on every solver return) --------------------

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment);
bool respects_lists(const ListAssignment& l, const std::vector<int>& assignment);
bool verify_vd_solution(const Graph& g, const ListAssignment& l, const ColoringSolution& s);
bool verify_ed_solution(const Graph& g, int q, const ColoringSolution& s);

// --- hub-parameterized solvers -------------------------------------------

/// q^p enumeration of hub colorings; components checked by exhaustive
/// extension, memoized on (component, boundary coloring).
std::optional<ColoringSolution> solve_coloring(const Graph& g, const HubDecomposition& h,
                                               int q);

/// Improved branching over extendable boundary colorings (leaf count at
/// most (q^delta - 1)^ceil(p/delta)). Falls back to exhaustive hub
/// coloring once the live hub has at most 2*delta vertices.
std::optional<ColoringSolution> solve_list_coloring(const Graph& g, const ListAssignment& l,
                                                    const HubDecomposition& h,
                                                    SolveStats* stats = nullptr);

/// Optimum vertex deletion: (q+1)^p hub states, exact component extension.
ColoringSolution solve_coloring_vd(const Graph& g, const ListAssignment& l,
                                   const HubDecomposition& h);

/// Same optimum through the wildcard-CSP route.
ColoringSolution solve_coloring_vd_fast(const Graph& g, const ListAssignment& l,
                                        const HubDecomposition& h,
                                        SolveStats* stats = nullptr);

/// Optimum edge deletion: q^p hub colorings, constant-time local optimum
/// per component-plus-neighborhood subgraph.
ColoringSolution solve_coloring_ed(const Graph& g, const HubDecomposition& h, int q);

// --- exhaustive oracles ---------------------------------------------------

inline constexpr int kOracleColoringCap = 12;

std::optional<ColoringSolution> oracle_coloring(const Graph& g, int q);
std::optional<ColoringSolution> oracle_list_coloring(const Graph& g, const ListAssignment& l);
ColoringSolution oracle_vd(const Graph& g, const ListAssignment& l);
ColoringSolution oracle_ed(const Graph& g, int q);

}  // namespace hubsolve
