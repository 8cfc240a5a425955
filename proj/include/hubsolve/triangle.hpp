#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hubsolve/graph.hpp"
#include "hubsolve/rng.hpp"
#include "hubsolve/set_system.hpp"

namespace hubsolve {

using Triangle = std::array<int, 3>;  // sorted vertices

std::vector<Triangle> all_triangles(const Graph& g);

// --- oracles ----------------------------------------------------------------

inline constexpr int kTrianglePackingCapTriangles = 24;
inline constexpr int kTrianglePackingCapVertices = 13;

/// Exact maximum triangle packing by branch and bound.
long long oracle_triangle_packing(const Graph& g);

/// Exact triangle-partition decision by exact-cover backtracking
/// (fewest-candidates vertex first). Node-capped.
bool triangle_partition_exists(const Graph& g);

// --- Delta-eq gadget and the set-partition reduction ---------------------------

struct TriangleGadget {
    Graph graph;
    std::vector<int> portals;
};

/// 4r-vertex gadget on P, Q, A, B; exactly two packings cover every
/// non-portal vertex (one covering all portals, one covering none).
TriangleGadget build_trieq(int r);

/// All packings covering every non-portal vertex (each is maximal).
std::vector<std::vector<Triangle>> enumerate_full_cover_packings(const TriangleGadget& gad);

struct TriangleReduction {
    Graph graph;
    HubDecomposition hub;  // universe vertices, a (4r, r)-hub
};

/// Universe vertices become the hub; one trieq copy per set with portals
/// identified. G has a triangle partition iff (U,F) has a set partition.
TriangleReduction reduce_partition_to_triangle(const SetSystem& partition_eq);

// --- splitters -------------------------------------------------------------------

struct SplitterFamily {
    int N = 0;
    int p = 0;
    int ell = 0;
    std::vector<std::vector<int>> members;  // colors 1..ell per element of [N]
    std::string backend;                    // "exhaustive" | "monte-carlo"
    std::uint64_t seed = 0;
    long long reps = 0;
};

inline constexpr int kSplitterExhaustiveCapN = 14;
inline constexpr int kSplitterExhaustiveCapP = 5;

/// Does the member color S (|S| = p) as evenly as possible?
bool splits_evenly(const std::vector<int>& member, const std::vector<int>& subset, int ell);

/// exhaustive: deterministic greedy cover of all p-subsets by balanced
/// colorings (caps N <= 14, p <= 5). monte-carlo: reps uniform colorings,
/// reps chosen so a fixed p-subset is balanced with probability
/// >= 1 - 2^-20 (or given explicitly).
SplitterFamily build_splitter(int N, int p, int ell, const std::string& backend,
                              std::uint64_t seed = 1, long long reps = 0);

// --- precolored variant and the hub solver ------------------------------------------

struct PrecoloredInstance {
    Graph graph;
    long long t = 0;
    std::vector<int> hub;      // sorted
    std::vector<int> psi;      // colors 1..ell over components-then-Q-triangles
    int capacity = 1;          // c
};

struct TriangleVerdict {
    bool yes = false;
    std::vector<Triangle> witness;  // verified packing when yes
};

/// Lemma-style solver: per-color offsets, i-valid hub sets, one
/// set-packing instance per offset tuple solved by the set-system DP.
TriangleVerdict solve_precolored(const PrecoloredInstance& inst);

struct TriangleSolveOptions {
    int capacity = 1;
    std::string backend = "exhaustive";
    std::uint64_t seed = 1;
    long long reps = 0;
};

/// Pads the hub so c | p, builds a splitter over components + Q-triangles,
/// and returns YES iff some member yields a YES precolored instance.
TriangleVerdict solve_triangle_packing(const Graph& g, const HubDecomposition& h, long long t,
                                       const TriangleSolveOptions& opts = {});

bool verify_triangle_packing(const Graph& g, const std::vector<Triangle>& packing);

}  // namespace hubsolve
