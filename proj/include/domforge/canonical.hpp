#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "domforge/graph.hpp"
#include "domforge/graph_io.hpp"

namespace domforge {

// largest general-graph order for which minimum-encoding canonicalization
// is attempted; sweeps never need more
inline constexpr int kCanonicalGeneralGuard = 10;

namespace detail {

// AHU string of the tree component `members` (ids into g) rooted at `root`:
// "(" + sorted child codes + ")"
inline std::string rooted_tree_code(const Graph& g, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(root))
        if (w != parent) child_codes.push_back(rooted_tree_code(g, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const std::string& c : child_codes) code += c;
    code += ")";
    return code;
}

// centers of a tree component by leaf peeling; one or two vertices
inline std::vector<int> tree_centers(const Graph& g, const std::vector<int>& members) {
    if (members.size() <= 2) return members;
    std::vector<int> deg(g.order(), 0);
    std::vector<int> frontier;
    for (int v : members) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) frontier.push_back(v);
    }
    std::size_t removed = 0, alive = members.size();
    while (alive > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            ++removed;
            for (int w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        }
        alive = members.size() - removed;
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

// upper-triangle adjacency bits of g under labeling perm, packed into a
// uint64 (valid for order <= 11)
inline std::uint64_t encode_permuted(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t bits = 0;
    int k = 0;
    int n = g.order();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(perm[i], perm[j])) bits |= std::uint64_t{1} << k;
    return bits;
}

}  // namespace detail

// Complete isomorphism invariant. Forests (any order) get per-component AHU
// codes rooted at centers, components sorted; other graphs up to order 10
// get the minimum upper-triangle encoding over all vertex labelings,
// rendered as graph6. The two regimes never collide: prefixes differ.
inline std::string canonical_code(const Graph& g) {
    if (is_forest(g)) {
        std::vector<std::string> comp_codes;
        for (const Relabeled& comp : components(g)) {
            std::vector<int> all(comp.graph.order());
            std::iota(all.begin(), all.end(), 0);
            std::vector<int> centers = detail::tree_centers(comp.graph, all);
            std::string best;
            for (int c : centers) {
                std::string code = detail::rooted_tree_code(comp.graph, c, -1);
                if (best.empty() || code < best) best = std::move(code);
            }
            comp_codes.push_back(std::move(best));
        }
        std::sort(comp_codes.begin(), comp_codes.end());
        std::string out = "F:";
        for (const std::string& c : comp_codes) out += c;
        return out;
    }
    int n = g.order();
    if (n > kCanonicalGeneralGuard)
        throw std::invalid_argument("canonical_code: general graphs supported up to order " +
                                    std::to_string(kCanonicalGeneralGuard));
    std::vector<int> perm(n), best_perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    best_perm = perm;
    std::uint64_t best = detail::encode_permuted(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::uint64_t bits = detail::encode_permuted(g, perm);
        if (bits < best) {
            best = bits;
            best_perm = perm;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(best_perm[i], best_perm[j])) edges.emplace_back(i, j);
    return "G:" + to_graph6(Graph(n, edges));
}

// brute-force isomorphism test; intended as the oracle canonical_code is
// validated against in tests, and for deduplicating sweep findings
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; ok && v < n; ++v)
            if (da[v] != db[perm[v]]) ok = false;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace domforge
