#include <doctest.h>

#include <set>

#include "domforge/enumerate.hpp"
#include "helpers.hpp"

using namespace domforge;

TEST_CASE("tree generation matches the labeled dedup oracle") {
    // oracle: decode every labeled tree (Prufer) and dedup by canonical code
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> oracle = testutil::labeled_tree_codes(n);
        std::vector<Graph> generated = trees(n);
        std::set<std::string> got;
        for (const Graph& t : generated) {
            CHECK(is_tree(t));
            CHECK(t.order() == n);
            got.insert(canonical_code(t));
        }
        CHECK(got.size() == generated.size());  // no duplicate classes emitted
        CHECK(got == oracle);
    }
}

TEST_CASE("tree counts at larger orders") {
    CHECK(trees(4).size() == 2);
    CHECK(trees(7).size() == 11);
    CHECK(trees(10).size() == 106);
    CHECK(trees(12).size() == 551);
}

TEST_CASE("tree stream order is deterministic and sorted by code") {
    std::vector<Graph> a = trees(9), b = trees(9);
    REQUIRE(a.size() == b.size());
    std::string prev;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string code = canonical_code(a[i]);
        CHECK(code == canonical_code(b[i]));
        CHECK(prev < code);
        prev = code;
    }
}

TEST_CASE("tree generation guard") {
    CHECK_THROWS_AS(trees(0), std::invalid_argument);
    CHECK_THROWS_AS(trees(17), std::invalid_argument);
    CHECK_THROWS_AS(forests_no_isolated(1), std::invalid_argument);
    CHECK_THROWS_AS(forests_no_isolated(17), std::invalid_argument);
}

TEST_CASE("forest generation: counts, validity, no duplicates") {
    CHECK(forests_no_isolated(4).size() == 3);   // P_4, K_{1,3}, 2 K_2
    CHECK(forests_no_isolated(5).size() == 4);
    CHECK(forests_no_isolated(6).size() == 10);

    // oracle: multiset counting over validated tree counts
    std::vector<std::uint64_t> tree_counts(11, 0);
    for (int s = 2; s <= 10; ++s) tree_counts[s] = trees(s).size();
    for (int n = 2; n <= 10; ++n)
        CHECK(forests_no_isolated(n).size() == testutil::forest_count_oracle(n, tree_counts));

    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> seen;
        for (const Graph& f : forests_no_isolated(n)) {
            CHECK(f.order() == n);
            CHECK(is_forest(f));
            CHECK_FALSE(has_isolated(f));
            CHECK(seen.insert(canonical_code(f)).second);
        }
    }
}

TEST_CASE("forests include disconnected shapes") {
    bool found_2k2 = false;
    for (const Graph& f : forests_no_isolated(4))
        if (components(f).size() == 2) found_2k2 = true;
    CHECK(found_2k2);
}

TEST_CASE("labeled graph streams") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(7) == 2097152);

    std::size_t seen = 0;
    std::set<std::string> distinct;
    for_each_labeled_graph(3, [&](const Graph& g) {
        ++seen;
        CHECK(g.order() == 3);
        distinct.insert(to_graph6(g));
    });
    CHECK(seen == 8);
    CHECK(distinct.size() == 8);

    CHECK(labeled_graphs(4).size() == 64);
    CHECK_THROWS_AS(labeled_graphs(9), std::invalid_argument);

    // bit order matches the graph6 upper-triangle convention
    Graph one_edge = labeled_graph_from_mask(4, 1);
    CHECK(one_edge.has_edge(0, 1));
    CHECK(one_edge.size() == 1);
    CHECK(labeled_graph_from_mask(4, 63) == testutil::complete(4));
}

TEST_CASE("family spec validation and filters") {
    FamilySpec ok{Family::trees, 10};
    CHECK_NOTHROW(ok.validate());
    FamilySpec big{Family::labeled_graphs, 9};
    CHECK_THROWS_AS(big.validate(), std::invalid_argument);
    FamilySpec huge{Family::forests_no_isolated, 17};
    CHECK_THROWS_AS(huge.validate(), std::invalid_argument);
    CHECK(family_name(Family::forests_no_isolated) == "forests-no-isolated");

    FamilySpec filtered{Family::labeled_graphs, 4, true, true};
    Graph p4 = testutil::path(4);
    Graph split = testutil::disjoint(testutil::path(2), testutil::path(2));
    Graph lonely = testutil::disjoint(testutil::path(3), Graph(1));
    CHECK(filtered.admits(p4));
    CHECK_FALSE(filtered.admits(split));   // disconnected
    CHECK_FALSE(filtered.admits(lonely));  // isolated vertex
    FamilySpec open{Family::labeled_graphs, 4};
    CHECK(open.admits(split));
    CHECK(open.admits(lonely));
}
