#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "domforge/canonical.hpp"
#include "domforge/graph.hpp"

namespace domforge {

inline constexpr int kTreeOrderGuard = 16;
inline constexpr int kLabeledOrderGuard = 8;

enum class Family { trees, forests_no_isolated, labeled_graphs };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::trees: return "trees";
        case Family::forests_no_isolated: return "forests-no-isolated";
        case Family::labeled_graphs: return "labeled-graphs";
    }
    return "?";
}

// sweep domain descriptor
struct FamilySpec {
    Family family = Family::trees;
    int order = 1;
    bool require_connected = false;
    bool require_no_isolated = false;

    void validate() const {
        if (family == Family::labeled_graphs) {
            if (order < 1 || order > kLabeledOrderGuard)
                throw std::invalid_argument("labeled-graphs supports 1 <= n <= " +
                                            std::to_string(kLabeledOrderGuard));
        } else if (order < 1 || order > kTreeOrderGuard) {
            throw std::invalid_argument("tree/forest families support n <= " +
                                        std::to_string(kTreeOrderGuard));
        }
    }

    bool admits(const Graph& g) const {
        if (require_connected && !is_connected(g)) return false;
        if (require_no_isolated && has_isolated(g)) return false;
        return true;
    }
};

// One representative per isomorphism class of trees on n vertices, sorted by
// canonical code. Grown recursively: every tree of order n arises from some
// order n-1 tree by attaching a leaf, so leaf extension plus canonical dedup
// is complete.
inline std::vector<Graph> trees(int n) {
    if (n < 1 || n > kTreeOrderGuard)
        throw std::invalid_argument("trees: order must be in [1, " +
                                    std::to_string(kTreeOrderGuard) + "]");
    std::map<std::string, Graph> reps;
    reps.emplace("()", Graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : reps) {
            for (int host = 0; host < t.order(); ++host) {
                std::vector<std::pair<int, int>> edges = t.edge_list();
                edges.emplace_back(host, t.order());
                Graph grown(t.order() + 1, edges);
                std::string grown_code = canonical_code(grown);
                next.emplace(std::move(grown_code), std::move(grown));
            }
        }
        reps = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, t] : reps) out.push_back(std::move(t));
    return out;
}

namespace detail {

inline Graph disjoint_union(const std::vector<const Graph*>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph* p : parts) {
        for (auto [u, v] : p->edge_list()) edges.emplace_back(n + u, n + v);
        n += p->order();
    }
    return Graph(n, edges);
}

}  // namespace detail

// One representative per isomorphism class of forests on n vertices with
// minimum degree >= 1: multisets of trees of order >= 2 partitioning n.
// Parts are taken with non-decreasing sizes and, within a size, by
// non-decreasing index into the sorted tree list, so no multiset repeats.
inline std::vector<Graph> forests_no_isolated(int n) {
    if (n < 2 || n > kTreeOrderGuard)
        throw std::invalid_argument("forests_no_isolated: order must be in [2, " +
                                    std::to_string(kTreeOrderGuard) + "]");
    std::vector<std::vector<Graph>> trees_of;  // trees_of[s] = trees on s vertices
    trees_of.resize(n + 1);
    for (int s = 2; s <= n; ++s) trees_of[s] = trees(s);

    std::vector<Graph> out;
    std::vector<const Graph*> chosen;
    // parts of size >= `min_size`; within the current size, indices >= min_index
    auto rec = [&](auto&& self, int remaining, int min_size, int min_index) -> void {
        if (remaining == 0) {
            out.push_back(detail::disjoint_union(chosen));
            return;
        }
        for (int s = min_size; s <= remaining; ++s) {
            if (remaining - s == 1) continue;  // a leftover K_1 would be isolated
            const std::vector<Graph>& pool = trees_of[s];
            int start = s == min_size ? min_index : 0;
            for (int i = start; i < static_cast<int>(pool.size()); ++i) {
                chosen.push_back(&pool[i]);
                self(self, remaining - s, s, i);
                chosen.pop_back();
            }
        }
    };
    rec(rec, n, 2, 0);
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) order.emplace_back(canonical_code(out[i]), i);
    std::sort(order.begin(), order.end());
    std::vector<Graph> sorted;
    sorted.reserve(out.size());
    for (const auto& [code, i] : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

// ----- labeled simple graphs as edge-set bitmasks -----
//
// Edge bit order is colexicographic: bit of {i,j} with i<j is j(j-1)/2 + i,
// matching the upper-triangle column order graph6 uses.

inline int edge_bit_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > kLabeledOrderGuard + 1)
        throw std::invalid_argument("labeled_graph_count: order out of range");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> edge_bit_index(i, j)) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// all 2^C(n,2) labeled graphs in increasing bitmask order
template <class Fn>
inline void for_each_labeled_graph(int n, Fn&& fn) {
    if (n < 1 || n > kLabeledOrderGuard)
        throw std::invalid_argument("labeled graphs supported for 1 <= n <= " +
                                    std::to_string(kLabeledOrderGuard));
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(labeled_graph_from_mask(n, mask));
}

inline std::vector<Graph> labeled_graphs(int n) {
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(labeled_graph_count(n)));
    for_each_labeled_graph(n, [&](Graph g) { out.push_back(std::move(g)); });
    return out;
}

}  // namespace domforge
