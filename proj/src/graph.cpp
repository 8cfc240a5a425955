#include "hubsolve/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hubsolve/errors.hpp"

namespace hubsolve {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw validation_error("vertex count must be nonnegative");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw validation_error("vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(verts.size()), std::move(es));
}

std::vector<std::vector<int>> Graph::components_without(const std::vector<int>& removed) const {
    std::vector<char> gone(n_, 0), seen(n_, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n_; ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

ListAssignment ListAssignment::full(int n, int q) {
    ListAssignment l;
    l.q = q;
    std::vector<int> all(q);
    for (int c = 0; c < q; ++c) all[c] = c + 1;
    l.lists.assign(n, all);
    return l;
}

bool ListAssignment::allows(int v, int color) const {
    const auto& lst = lists[v];
    return std::binary_search(lst.begin(), lst.end(), color);
}

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return mx == 0 ? 0 : std::max(0, static_cast<int>(mx) - 1);
}

bool TreeDecomposition::valid_for(const Graph& g) const {
    if (bags.empty()) return g.n() == 0;
    // every vertex in some bag, and the bags containing it form a subtree
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holders;
        for (std::size_t i = 0; i < bags.size(); ++i)
            if (std::binary_search(bags[i].begin(), bags[i].end(), v))
                holders.push_back(static_cast<int>(i));
        if (holders.empty()) return false;
        std::vector<char> in(bags.size(), 0), seen(bags.size(), 0);
        for (int h : holders) in[h] = 1;
        std::vector<int> stack{holders[0]};
        seen[holders[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            ++reached;
            for (int nb : adj[b])
                if (in[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
        }
        if (reached != static_cast<int>(holders.size())) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& b : bags)
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// --- parsing -----------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

[[noreturn]] void fail_line(std::size_t lineno, const std::string& what) {
    throw parse_error("line " + std::to_string(lineno + 1) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string tag;
        if (!(in >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail_line(i, "duplicate header");
            if (!(in >> n >> m) || n < 0 || m < 0) fail_line(i, "malformed header");
        } else if (tag == "e") {
            if (n < 0) fail_line(i, "edge before header");
            int u, v;
            if (!(in >> u >> v)) fail_line(i, "malformed edge");
            if (u < 1 || u > n || v < 1 || v > n) fail_line(i, "vertex id out of range");
            if (u == v) fail_line(i, "self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else {
            fail_line(i, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error("missing 'p <n> <m>' header");
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

HubFile parse_hub(const std::string& text, int n) {
    auto lines = split_lines(text);
    HubFile h;
    int p = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string tag;
        if (!(in >> tag) || tag == "c") continue;
        if (tag == "hub") {
            if (!(in >> p >> h.sigma >> h.delta) || p < 0 || h.sigma < 0 || h.delta < 0)
                fail_line(i, "malformed hub header");
        } else {
            if (p < 0) fail_line(i, "ids before 'hub' header");
            std::istringstream ids(lines[i]);
            int v;
            while (ids >> v) {
                if (v < 1 || v > n) fail_line(i, "vertex id out of range");
                h.hub.push_back(v - 1);
            }
        }
    }
    if (p < 0) throw parse_error("missing 'hub <p> <sigma> <delta>' header");
    if (static_cast<int>(h.hub.size()) != p)
        throw parse_error("hub header declares " + std::to_string(p) + " ids, got " +
                          std::to_string(h.hub.size()));
    std::sort(h.hub.begin(), h.hub.end());
    h.hub.erase(std::unique(h.hub.begin(), h.hub.end()), h.hub.end());
    if (static_cast<int>(h.hub.size()) != p) throw parse_error("duplicate hub vertex");
    return h;
}

std::string serialize_hub(const HubFile& h) {
    std::ostringstream out;
    out << "hub " << h.hub.size() << ' ' << h.sigma << ' ' << h.delta << '\n';
    for (std::size_t i = 0; i < h.hub.size(); ++i)
        out << h.hub[i] + 1 << (i + 1 == h.hub.size() ? '\n' : ' ');
    return out.str();
}

ListAssignment parse_lists(const std::string& text, int n, int q) {
    ListAssignment l = ListAssignment::full(n, q);
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string s = lines[i];
        if (s.empty() || s[0] == 'c') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) fail_line(i, "missing ':'");
        std::istringstream head(s.substr(0, colon)), tail(s.substr(colon + 1));
        int v;
        if (!(head >> v) || v < 1 || v > n) fail_line(i, "vertex id out of range");
        std::vector<int> colors;
        int c;
        while (tail >> c) {
            if (c < 1 || c > q) fail_line(i, "color out of range");
            colors.push_back(c);
        }
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        l.lists[v - 1] = std::move(colors);
    }
    return l;
}

std::string serialize_lists(const ListAssignment& l) {
    std::ostringstream out;
    for (std::size_t v = 0; v < l.lists.size(); ++v) {
        out << v + 1 << ':';
        for (int c : l.lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

// --- hub operations ----------------------------------------------------

HubDecomposition validate_hub(const Graph& g, std::vector<int> q_set, int sigma, int delta) {
    std::sort(q_set.begin(), q_set.end());
    q_set.erase(std::unique(q_set.begin(), q_set.end()), q_set.end());
    for (int v : q_set)
        if (v < 0 || v >= g.n()) throw validation_error("hub vertex out of range");

    HubDecomposition h;
    h.hub = std::move(q_set);
    h.sigma = sigma;
    h.delta = delta;
    h.components = g.components_without(h.hub);

    std::vector<char> in_hub(g.n(), 0);
    for (int v : h.hub) in_hub[v] = 1;
    for (const auto& comp : h.components) {
        if (static_cast<int>(comp.size()) > sigma)
            throw validation_error("ComponentTooLarge: component starting at vertex " +
                                   std::to_string(comp.front() + 1) + " has " +
                                   std::to_string(comp.size()) + " > sigma=" +
                                   std::to_string(sigma) + " vertices");
        std::set<int> nbhd;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (in_hub[w]) nbhd.insert(w);
        if (static_cast<int>(nbhd.size()) > delta)
            throw validation_error("NeighborhoodTooLarge: component starting at vertex " +
                                   std::to_string(comp.front() + 1) + " touches " +
                                   std::to_string(nbhd.size()) + " > delta=" +
                                   std::to_string(delta) + " hub vertices");
        h.neighborhoods.emplace_back(nbhd.begin(), nbhd.end());
    }
    return h;
}

TreeDecomposition hub_to_tree_decomposition(const HubDecomposition& h, const Graph& g) {
    (void)g;
    TreeDecomposition td;
    td.bags.push_back(h.hub);
    for (std::size_t i = 0; i < h.components.size(); ++i) {
        std::vector<int> bag = h.hub;
        bag.insert(bag.end(), h.components[i].begin(), h.components[i].end());
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        td.tree_edges.emplace_back(0, static_cast<int>(i) + 1);
    }
    return td;
}

std::vector<int> greedy_hub(const Graph& g, int sigma, int delta) {
    std::vector<int> hub;
    std::vector<char> in_hub(g.n(), 0);
    while (true) {
        auto comps = g.components_without(hub);
        const std::vector<int>* bad = nullptr;
        for (const auto& comp : comps) {
            bool too_big = static_cast<int>(comp.size()) > sigma;
            if (!too_big) {
                std::set<int> nbhd;
                for (int v : comp)
                    for (int w : g.neighbors(v))
                        if (in_hub[w]) nbhd.insert(w);
                if (static_cast<int>(nbhd.size()) > delta) too_big = true;
            }
            if (too_big) {
                bad = &comp;
                break;
            }
        }
        if (!bad) break;
        int pick = -1;
        for (int v : *bad)
            if (pick < 0 || g.degree(v) > g.degree(pick)) pick = v;  // ties: lowest id wins
        hub.push_back(pick);
        in_hub[pick] = 1;
        std::sort(hub.begin(), hub.end());
    }
    return hub;
}

}  // namespace hubsolve
