#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "domforge/canonical.hpp"
#include "domforge/enumerate.hpp"
#include "helpers.hpp"

using namespace domforge;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("canonical codes are invariant under relabeling") {
    Graph p4 = testutil::path(4);
    CHECK(canonical_code(p4) == canonical_code(relabel(p4, {3, 1, 2, 0})));
    CHECK(canonical_code(p4) != canonical_code(testutil::star(3)));

    Graph a = testutil::disjoint(Graph(2, {{0, 1}}), testutil::path(3));
    Graph b = testutil::disjoint(testutil::path(3), Graph(2, {{0, 1}}));
    CHECK(canonical_code(a) == canonical_code(b));

    std::mt19937_64 rng(2718281);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(n, 0.4, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(g) == canonical_code(relabel(g, perm)));
    }
}

TEST_CASE("canonical code guard for large non-forests") {
    CHECK_THROWS_AS(canonical_code(testutil::cycle(11)), std::invalid_argument);
    // forests have no order guard
    std::vector<int> rev(40);
    for (int i = 0; i < 40; ++i) rev[i] = 39 - i;
    CHECK(canonical_code(testutil::path(40)) == canonical_code(relabel(testutil::path(40), rev)));
}

TEST_CASE("canonical code is a complete isomorphism invariant up to order 6") {
    // oracle: brute-force permutation search; group all labeled graphs by
    // code, confirm members match their representative and representatives
    // are pairwise non-isomorphic
    for (int n = 0; n <= 6; ++n) {
        std::map<std::string, std::vector<Graph>> classes;
        const std::uint64_t total = n == 0 ? 1 : labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = labeled_graph_from_mask(n, mask);
            classes[canonical_code(g)].push_back(std::move(g));
        }
        std::vector<const Graph*> reps;
        for (auto& [code, members] : classes) {
            reps.push_back(&members.front());
            if (n <= 5) {
                for (const Graph& g : members) CHECK(isomorphic_brute(members.front(), g));
            } else {
                // spot checks keep the order-6 pass fast
                CHECK(isomorphic_brute(members.front(), members.back()));
                CHECK(isomorphic_brute(members.front(), members[members.size() / 2]));
            }
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(isomorphic_brute(*reps[i], *reps[j]));
        // known unlabeled graph counts: 1, 1, 2, 4, 11, 34, 156
        static const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
        CHECK(classes.size() == expected[n]);
    }
}

TEST_CASE("tree codes partition labeled trees exactly as brute isomorphism does") {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> code_classes;
        std::vector<Graph> iso_reps;
        std::vector<int> seq(std::max(0, n - 2), 0);
        while (true) {
            Graph t = testutil::prufer_decode(n, seq);
            code_classes.insert(canonical_code(t));
            bool found = false;
            for (const Graph& r : iso_reps)
                if (isomorphic_brute(r, t)) {
                    found = true;
                    break;
                }
            if (!found) iso_reps.push_back(t);
            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0 || n <= 2) break;
            ++seq[i];
        }
        CHECK(code_classes.size() == iso_reps.size());
    }
}

TEST_CASE("codes separate close non-isomorphic pairs") {
    // same degree sequence, different graphs
    Graph a(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});          // C6
    Graph b(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});          // 2 triangles
    CHECK(canonical_code(a) != canonical_code(b));
    CHECK_FALSE(isomorphic_brute(a, b));

    Graph chair = attach_leaves(testutil::path(4), {0, 1, 0, 0});
    Graph fork = attach_leaves(testutil::path(4), {0, 0, 1, 0});
    CHECK(canonical_code(chair) == canonical_code(fork));  // mirror images
}
