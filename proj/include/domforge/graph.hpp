#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domforge {

using VertexId = int;

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; all surgeries below return fresh graphs. Neighbor lists are
// sorted; for n <= 63 a per-vertex adjacency bitmask is kept as a fast path
// alongside the generic representation.
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {}) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        adj_.resize(n_);
        if (has_bitmask()) bits_.assign(n_, 0);
        for (auto [u, v] : edges) add_edge(u, v);
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    int order() const { return n_; }

    int size() const {
        int deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += static_cast<int>(nb.size());
        return deg_sum / 2;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (has_bitmask()) return (bits_[u] >> v) & 1;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool has_bitmask() const { return n_ <= 63; }

    // open neighborhood as a bitmask; only for n <= 63
    std::uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        if (!has_bitmask()) throw std::logic_error("Graph: order exceeds bitmask range");
        return bits_[v];
    }

    std::uint64_t closed_neighbor_mask(int v) const {
        return neighbor_mask(v) | (std::uint64_t{1} << v);
    }

    std::vector<int> closed_neighborhood(int v) const {
        check_vertex(v);
        std::vector<int> r = adj_[v];
        r.insert(std::lower_bound(r.begin(), r.end(), v), v);
        return r;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> r;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) r.emplace_back(u, v);
        return r;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) return;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        if (has_bitmask()) {
            bits_[u] |= std::uint64_t{1} << v;
            bits_[v] |= std::uint64_t{1} << u;
        }
    }
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

// result of a surgery that renumbers vertices: orig[new_id] = old_id
struct Relabeled {
    Graph graph;
    std::vector<int> orig;
};

inline Relabeled delete_vertices(const Graph& g, const std::vector<int>& victims) {
    std::vector<char> gone(g.order(), 0);
    for (int v : victims) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("delete_vertices: vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> new_id(g.order(), -1), orig;
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) {
            new_id[v] = static_cast<int>(orig.size());
            orig.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list())
        if (!gone[u] && !gone[v]) edges.emplace_back(new_id[u], new_id[v]);
    return {Graph(static_cast<int>(orig.size()), edges), std::move(orig)};
}

// G/u: drop u, make its former neighbors pairwise adjacent
inline Graph contract(const Graph& g, int u) {
    const std::vector<int>& nb = g.neighbors(u);
    std::vector<int> new_id(g.order());
    for (int v = 0; v < g.order(); ++v) new_id[v] = v < u ? v : v - 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edge_list())
        if (a != u && b != u) edges.emplace_back(new_id[a], new_id[b]);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            edges.emplace_back(new_id[nb[i]], new_id[nb[j]]);
    return Graph(g.order() - 1, edges);
}

// G_(u,k): glue K_{k+1} onto G so that the clique and G share exactly u
inline Graph glue_clique(const Graph& g, int u, int k) {
    if (k < 1) throw std::invalid_argument("glue_clique: k must be >= 1");
    g.neighbors(u);  // range check
    std::vector<std::pair<int, int>> edges = g.edge_list();
    int n = g.order();
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(u, n + i);
        for (int j = i + 1; j < k; ++j) edges.emplace_back(n + i, n + j);
    }
    return Graph(n + k, edges);
}

// G(v_1^{k_1},...,v_n^{k_n}): add counts[i] fresh leaves at vertex i
inline Graph attach_leaves(const Graph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.order())
        throw std::invalid_argument("attach_leaves: counts length must equal order");
    std::vector<std::pair<int, int>> edges = g.edge_list();
    int next = g.order();
    for (int v = 0; v < g.order(); ++v) {
        if (counts[v] < 0) throw std::invalid_argument("attach_leaves: negative count");
        for (int i = 0; i < counts[v]; ++i) edges.emplace_back(v, next++);
    }
    return Graph(next, edges);
}

// connected components ordered by smallest original vertex id
inline std::vector<Relabeled> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<Relabeled> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s}, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<int> new_id(g.order(), -1);
        for (std::size_t i = 0; i < members.size(); ++i) new_id[members[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int v : members)
            for (int w : g.neighbors(v))
                if (v < w) edges.emplace_back(new_id[v], new_id[w]);
        out.push_back({Graph(static_cast<int>(members.size()), edges), std::move(members)});
    }
    return out;
}

struct VertexClass {
    int degree = 0;
    bool is_leaf = false;
    bool is_isolated = false;
    bool is_support = false;
    int leaf_neighbor_count = 0;  // |L_G(v)|
};

inline std::vector<VertexClass> classify(const Graph& g) {
    std::vector<VertexClass> out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        out[v].degree = g.degree(v);
        out[v].is_leaf = out[v].degree == 1;
        out[v].is_isolated = out[v].degree == 0;
    }
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v))
            if (out[w].is_leaf) {
                out[v].is_support = true;
                ++out[v].leaf_neighbor_count;
            }
    return out;
}

// the equality class of the 2n/3 bound: every non-leaf vertex is a support
// vertex with exactly one or two leaf neighbors (vacuously true at order 0)
inline bool is_extremal_shape(const Graph& g) {
    std::vector<VertexClass> cls = classify(g);
    for (const VertexClass& c : cls)
        if (!c.is_leaf && !(c.is_support && (c.leaf_neighbor_count == 1 || c.leaf_neighbor_count == 2)))
            return false;
    return true;
}

inline bool has_isolated(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

inline bool is_forest(const Graph& g) {
    // acyclic iff every component has |E| = |V| - 1; equivalently a DFS
    // never revisits a vertex except through its tree parent
    std::vector<int> parent(g.order(), -2);
    for (int s = 0; s < g.order(); ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                if (parent[w] != -2) return false;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

}  // namespace domforge
