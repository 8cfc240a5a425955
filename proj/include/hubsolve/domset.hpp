#pragma once

#include <cstdint>
#include <vector>

#include "hubsolve/graph.hpp"
#include "hubsolve/set_system.hpp"

namespace hubsolve {

inline constexpr int kDomsetOracleCap = 20;

bool is_dominating_set(const Graph& g, const std::vector<int>& set);

/// Exact minimum dominating set by branch and bound over undominated
/// vertices.
std::vector<int> oracle_domset(const Graph& g, int cap = kDomsetOracleCap);

/// Hub solver: labels Q into selected / hub-dominated / needs-component
/// (3^p), with an inner subset-cover DP over the needs-set fed by
/// component option tables. Worst case 4^p poly.
std::vector<int> solve_domset_hub(const Graph& g, const HubDecomposition& h);

struct DomsetReduction {
    Graph graph;
    std::vector<int> hub;
    long long size_offset = 0;  // min domset = offset + source optimum
};

/// Set Cover reduction: min domset = min cover + |F|; hub is a (3,d)-hub.
DomsetReduction reduce_setcover_to_domset(const SetSystem& cover);

/// Hitting Set reduction: min domset = n + min hitting set; (2,d)-hub.
DomsetReduction reduce_hittingset_to_domset(int n, const std::vector<std::uint64_t>& family);

/// brute-force min hitting set (2^n scan), for the reduction tests
long long oracle_hitting_set(int n, const std::vector<std::uint64_t>& family);

}  // namespace hubsolve
