#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hubsolve {

/// Simple undirected graph over dense 0-based vertex ids.
/// Immutable after construction; no self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;
    /// Validates, deduplicates and sorts the edge list.
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Induced subgraph on `verts` (result ids follow the order of `verts`).
    Graph induced(const std::vector<int>& verts) const;

    /// Connected components of G - removed, each sorted ascending,
    /// ordered by minimum vertex id.
    std::vector<std::vector<int>> components_without(const std::vector<int>& removed) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Hub set Q plus the verified components of G-Q with their bounds.
struct HubDecomposition {
    std::vector<int> hub;                          // sorted
    std::vector<std::vector<int>> components;      // components of G-Q
    std::vector<std::vector<int>> neighborhoods;   // per component, within Q
    int sigma = 0;
    int delta = 0;

    int p() const { return static_cast<int>(hub.size()); }
};

/// Per-vertex color lists over [q]; colors are 1-based.
struct ListAssignment {
    int q = 0;
    std::vector<std::vector<int>> lists;  // sorted, may be empty (infeasible marker)

    static ListAssignment full(int n, int q);
    bool allows(int v, int color) const;
};

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;  // over bag indices

    int width() const;
    /// Checks the three decomposition axioms against g.
    bool valid_for(const Graph& g) const;
};

// --- file formats ------------------------------------------------------

/// `p <n> <m>` header then `e <u> <v>` lines, 1-based ids, `c` comments.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// `hub <p> <sigma> <delta>` then p space-separated 1-based ids.
struct HubFile {
    std::vector<int> hub;
    int sigma = 0;
    int delta = 0;
};
HubFile parse_hub(const std::string& text, int n);
std::string serialize_hub(const HubFile& h);

/// One line per vertex `<v>: <c1> <c2> ...`; omitted vertices get [q].
ListAssignment parse_lists(const std::string& text, int n, int q);
std::string serialize_lists(const ListAssignment& l);

// --- operations --------------------------------------------------------

/// Computes the components of G - q_set and checks the (sigma, delta)
/// bounds. Throws validation_error (ComponentTooLarge / NeighborhoodTooLarge).
HubDecomposition validate_hub(const Graph& g, std::vector<int> q_set, int sigma, int delta);

/// Star decomposition: center bag Q, one leaf bag Q u C_i per component.
TreeDecomposition hub_to_tree_decomposition(const HubDecomposition& h, const Graph& g);

/// Deterministic greedy: grows Q until every component of G-Q obeys the
/// bounds. Highest-degree-first inside the first violating component,
/// ties by vertex id. No minimality guarantee.
std::vector<int> greedy_hub(const Graph& g, int sigma, int delta);

}  // namespace hubsolve
