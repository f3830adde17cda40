#pragma once

// shared test fixtures and independent oracles

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "domforge/canonical.hpp"
#include "domforge/graph.hpp"

namespace testutil {

using domforge::Graph;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

// K_{1,k}: center 0, leaves 1..k
inline Graph star(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, edges);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph disjoint(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edge_list();
    for (auto [u, v] : b.edge_list()) edges.emplace_back(a.order() + u, a.order() + v);
    return Graph(a.order() + b.order(), edges);
}

// labeled tree from its sequence; seq has length n-2 with entries in [0, n)
inline Graph prufer_decode(int n, const std::vector<int>& seq) {
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

// canonical codes of all labeled trees on n vertices (n <= 8 stays cheap):
// the dedup oracle isomorphism-free generation is validated against
inline std::set<std::string> labeled_tree_codes(int n) {
    std::set<std::string> codes;
    if (n <= 2) {
        codes.insert(domforge::canonical_code(prufer_decode(n, {})));
        return codes;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        codes.insert(domforge::canonical_code(prufer_decode(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return codes;
}

// multiset counting: forests on n vertices whose components are trees of
// order >= 2, given the unlabeled tree counts per order
inline std::uint64_t forest_count_oracle(int n, const std::vector<std::uint64_t>& trees_per_order) {
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (int s = 2; s <= n; ++s) {
        std::uint64_t types = s < static_cast<int>(trees_per_order.size()) ? trees_per_order[s] : 0;
        for (std::uint64_t t = 0; t < types; ++t)
            for (int m = s; m <= n; ++m) ways[m] += ways[m - s];
    }
    return ways[n];
}

// Erdos-Renyi-ish labeled graph with each edge kept independently
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution keep(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace testutil
