#include <doctest.h>

#include <random>
#include <sstream>

#include "domforge/graph_io.hpp"
#include "helpers.hpp"

using namespace domforge;

TEST_CASE("edge-list reader accepts comments and blank lines") {
    std::istringstream in(
        "# a path on four vertices\n"
        "\n"
        "4 3\n"
        "0 1\n"
        "1 2   # middle edge\n"
        "\n"
        "2 3\n");
    Graph g = read_edge_list(in, "p4.txt");
    CHECK(g == testutil::path(4));
}

TEST_CASE("edge-list reader diagnostics carry source and line") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_edge_list(in, "bad.txt");
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("bad.txt:") == 0);
            CHECK(msg.find(needle) != std::string::npos);
        }
    };
    expect_error("", "missing 'n m' header");
    expect_error("3\n", "header");
    expect_error("3 1\n0 5\n", "out of range");
    expect_error("3 1\n1 1\n", "self-loop");
    expect_error("3 2\n0 1\n", "expected 2 edges, got 1");
    expect_error("3 1\n0 x\n", "integers");
}

TEST_CASE("edge-list writer round trips") {
    std::ostringstream out;
    write_edge_list(out, testutil::star(3));
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == testutil::star(3));
}

TEST_CASE("graph6 known encodings") {
    // K_3 is "Bw" in the standard encoding
    CHECK(to_graph6(testutil::complete(3)) == "Bw");
    CHECK(from_graph6("Bw") == testutil::complete(3));
    // empty graph on 5 vertices: header byte 'D', ten zero bits
    CHECK(to_graph6(Graph(5)) == "D??");
    CHECK(from_graph6("D??") == Graph(5));
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trip on random graphs up to 62 vertices") {
    std::mt19937_64 rng(606060);
    for (int iter = 0; iter < 80; ++iter) {
        int n = static_cast<int>(rng() % 63);
        Graph g = testutil::random_graph(n, 0.3, rng);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::runtime_error);
    CHECK_THROWS_AS(from_graph6("~??"), std::runtime_error);  // multi-byte order
    CHECK_THROWS_AS(from_graph6("Bwx"), std::runtime_error);  // trailing bytes
    CHECK_THROWS_AS(from_graph6("B"), std::runtime_error);    // truncated
    CHECK_THROWS_AS(to_graph6(testutil::path(63)), std::invalid_argument);
}

TEST_CASE("graph6 line reader") {
    std::istringstream in(
        ">>graph6<<Bw\n"
        "# comment\n"
        "\n"
        "D??\n");
    auto graphs = read_graph6_lines(in, "list.g6");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == testutil::complete(3));
    CHECK(graphs[1] == Graph(5));

    std::istringstream bad("Bw\nnot-a-graph\n");
    try {
        read_graph6_lines(bad, "list.g6");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("list.g6:2") == 0);
    }
}
