#include <doctest.h>

#include <algorithm>
#include <random>

#include "domforge/graph.hpp"
#include "helpers.hpp"

using namespace domforge;
using testutil::complete;
using testutil::cycle;
using testutil::path;
using testutil::star;

namespace {

void check_simple_invariants(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        CHECK_FALSE(g.has_edge(v, v));
        for (int w : nb) CHECK(g.has_edge(w, v));  // symmetry
    }
}

}  // namespace

TEST_CASE("edge-list construction") {
    Graph k2(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.has_edge(0, 1));

    Graph p4 = path(4);
    CHECK(p4.size() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    // duplicate edges collapse
    Graph dup(3, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup.size() == 1);
    CHECK(dup.degree(2) == 0);

    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK(Graph(0).order() == 0);
}

TEST_CASE("delete_vertices") {
    auto [p3, orig] = delete_vertices(path(4), {0});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(orig == std::vector<int>{1, 2, 3});
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    // removing a closed neighborhood can empty the graph
    auto emptied = delete_vertices(path(3), {0, 1, 2});
    CHECK(emptied.graph.order() == 0);

    auto scattered = delete_vertices(star(3), {0});
    CHECK(scattered.graph.order() == 3);
    CHECK(scattered.graph.size() == 0);

    CHECK_THROWS_AS(delete_vertices(path(3), {5}), std::out_of_range);

    // deleting nothing preserves the graph
    auto same = delete_vertices(path(5), {});
    CHECK(same.graph == path(5));
}

TEST_CASE("contract") {
    CHECK(contract(path(3), 1) == Graph(2, {{0, 1}}));
    // the two neighbors of an internal path vertex become adjacent
    Graph c = contract(path(4), 1);
    CHECK(c.order() == 3);
    CHECK(c.size() == 2);
    CHECK(c.has_edge(0, 1));  // former 0 and 2
    CHECK(c.has_edge(1, 2));  // former 2 and 3
    CHECK_FALSE(c.has_edge(0, 2));
    CHECK(contract(star(3), 0) == complete(3));
    CHECK_THROWS_AS(contract(path(3), 7), std::out_of_range);
}

TEST_CASE("glue_clique") {
    Graph k2(2, {{0, 1}});
    CHECK(glue_clique(k2, 0, 1) == Graph(3, {{0, 1}, {0, 2}}));

    Graph glued = glue_clique(k2, 0, 2);
    CHECK(glued.order() == 4);
    CHECK(glued.size() == 4);
    CHECK(glued.has_edge(2, 3));
    CHECK(glued.has_edge(0, 2));
    CHECK(glued.has_edge(0, 3));
    CHECK(glued.has_edge(0, 1));

    CHECK(glue_clique(Graph(1), 0, 3) == complete(4));
    CHECK_THROWS_AS(glue_clique(k2, 0, 0), std::invalid_argument);
}

TEST_CASE("attach_leaves") {
    Graph k2(2, {{0, 1}});
    CHECK(attach_leaves(k2, {1, 1}).size() == 3);
    CHECK(is_tree(attach_leaves(k2, {1, 1})));
    CHECK(attach_leaves(k2, {1, 1}).degree(0) == 2);

    Graph caterpillar = attach_leaves(k2, {1, 2});
    CHECK(caterpillar.order() == 5);
    CHECK(caterpillar.degree(1) == 3);

    CHECK(attach_leaves(Graph(1), {3}) == star(3));
    CHECK_THROWS_AS(attach_leaves(k2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(attach_leaves(k2, {1, -1}), std::invalid_argument);
}

TEST_CASE("components") {
    Graph two = testutil::disjoint(Graph(2, {{0, 1}}), path(3));
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.order() == 2);
    CHECK(comps[1].graph.order() == 3);
    CHECK(comps[0].orig == std::vector<int>{0, 1});
    CHECK(comps[1].orig == std::vector<int>{2, 3, 4});

    CHECK(components(path(4)).size() == 1);
    CHECK(components(Graph(0)).empty());
}

TEST_CASE("classify") {
    auto p4 = classify(path(4));
    CHECK(p4[0].is_leaf);
    CHECK(p4[3].is_leaf);
    CHECK(p4[1].is_support);
    CHECK(p4[1].leaf_neighbor_count == 1);
    CHECK(p4[2].leaf_neighbor_count == 1);
    CHECK_FALSE(p4[0].is_support);

    auto s3 = classify(star(3));
    CHECK(s3[0].is_support);
    CHECK(s3[0].leaf_neighbor_count == 3);
    CHECK(s3[1].is_leaf);

    auto p5 = classify(path(5));
    CHECK_FALSE(p5[2].is_leaf);
    CHECK_FALSE(p5[2].is_support);

    auto lone = classify(Graph(1));
    CHECK(lone[0].is_isolated);
    CHECK_FALSE(lone[0].is_support);
}

TEST_CASE("extremal shape predicate") {
    CHECK(is_extremal_shape(path(4)));
    CHECK_FALSE(is_extremal_shape(star(3)));
    CHECK_FALSE(is_extremal_shape(path(5)));
    CHECK(is_extremal_shape(Graph(0)));        // vacuous
    CHECK_FALSE(is_extremal_shape(Graph(1)));  // isolated vertex is non-leaf non-support
    CHECK(is_extremal_shape(Graph(2, {{0, 1}})));
    CHECK(is_extremal_shape(attach_leaves(Graph(2, {{0, 1}}), {1, 2})));
}

TEST_CASE("forest and isolation predicates") {
    CHECK(is_forest(path(4)));
    CHECK_FALSE(has_isolated(path(4)));
    CHECK_FALSE(is_forest(complete(3)));
    CHECK_FALSE(is_forest(cycle(5)));
    Graph mixed = testutil::disjoint(Graph(2, {{0, 1}}), Graph(1));
    CHECK(is_forest(mixed));
    CHECK(has_isolated(mixed));
    CHECK(is_forest(Graph(0)));
    CHECK(is_tree(path(7)));
    CHECK_FALSE(is_tree(mixed));
    CHECK_FALSE(is_tree(Graph(0)));
}

TEST_CASE("surgeries preserve simplicity, symmetry and irreflexivity") {
    std::mt19937_64 rng(42424242);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testutil::random_graph(n, 0.4, rng);
        check_simple_invariants(g);
        check_simple_invariants(contract(g, static_cast<int>(rng() % n)));
        check_simple_invariants(delete_vertices(g, {static_cast<int>(rng() % n)}).graph);
        check_simple_invariants(glue_clique(g, static_cast<int>(rng() % n), 1 + rng() % 3));
        std::vector<int> counts(n, 0);
        counts[rng() % n] = 1 + static_cast<int>(rng() % 2);
        check_simple_invariants(attach_leaves(g, counts));
        for (const auto& comp : components(g)) check_simple_invariants(comp.graph);
    }
}

TEST_CASE("contract joins all former neighbors pairwise") {
    std::mt19937_64 rng(777777);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(n, 0.5, rng);
        int u = static_cast<int>(rng() % n);
        Graph c = contract(g, u);
        CHECK(c.order() == n - 1);
        auto renum = [&](int v) { return v < u ? v : v - 1; };
        for (int a : g.neighbors(u))
            for (int b : g.neighbors(u))
                if (a != b) CHECK(c.has_edge(renum(a), renum(b)));
    }
}

TEST_CASE("attach_leaves then classify: new vertices are leaves, hosts are supports") {
    std::mt19937_64 rng(1001);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(n, 0.3, rng);
        std::vector<int> counts(n);
        for (int& c : counts) c = static_cast<int>(rng() % 3);
        Graph grown = attach_leaves(g, counts);
        auto cls = classify(grown);
        for (int v = n; v < grown.order(); ++v) CHECK(cls[v].is_leaf);
        for (int v = 0; v < n; ++v)
            if (counts[v] >= 1) {
                CHECK(cls[v].is_support);
                CHECK(cls[v].leaf_neighbor_count >= counts[v]);
            }
    }
}

TEST_CASE("bitmask fast path agrees with the generic adjacency path") {
    std::mt19937_64 rng(90210);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = testutil::random_graph(n, 0.5, rng);
        REQUIRE(g.has_bitmask());
        for (int v = 0; v < n; ++v) {
            std::uint64_t mask = g.neighbor_mask(v);
            CHECK(std::popcount(mask) == g.degree(v));
            for (int w = 0; w < n; ++w) {
                bool by_mask = (mask >> w) & 1;
                bool by_list = std::binary_search(g.neighbors(v).begin(), g.neighbors(v).end(), w);
                CHECK(by_mask == by_list);
                CHECK(by_mask == g.has_edge(v, w));
            }
            CHECK(g.closed_neighbor_mask(v) == (mask | (std::uint64_t{1} << v)));
        }
    }
    // beyond 63 vertices only the generic path exists
    Graph big = testutil::path(70);
    CHECK_FALSE(big.has_bitmask());
    CHECK(big.has_edge(10, 11));
    CHECK_FALSE(big.has_edge(10, 12));
    CHECK_THROWS_AS(big.neighbor_mask(0), std::logic_error);
}
