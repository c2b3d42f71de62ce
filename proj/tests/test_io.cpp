#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphpack/io.hpp"
#include "testutil.hpp"

#include <random>

using namespace gpk;
using namespace testutil;

TEST_CASE("edge-list format is exact") {
    CHECK(format_edge_list(make(6, {{4, 5}, {0, 1}, {2, 3}})) == "6 3\n0 1\n2 3\n4 5\n");
    CHECK(format_edge_list(Graph(0)) == "0 0\n");
    CHECK(format_edge_list(Graph(3)) == "3 0\n");
}

TEST_CASE("edge-list parsing") {
    const Graph g = parse_edge_list("# a comment\n3 2\n0 1\n\n# mid comment\n1 2\n");
    CHECK(g.size() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));

    // CRLF and stray blanks are tolerated
    CHECK(parse_edge_list("2 1\r\n0 1\r\n").edge_count() == 1);

    CHECK(parse_edge_list("0 0\n").size() == 0);
}

TEST_CASE("edge-list round trip") {
    // exhaustive over all labeled graphs on up to 4 vertices
    for (int n = 0; n <= 4; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (uint32_t mask = 0; mask < (uint32_t{1} << pairs.size()); ++mask) {
            Graph g(n);
            for (size_t k = 0; k < pairs.size(); ++k)
                if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
            CHECK(parse_edge_list(format_edge_list(g)) == g);
        }
    }
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        const Graph g = random_graph(1 + iter % 8, 0.5, rng);
        CHECK(parse_edge_list(format_edge_list(g)) == g);
    }
}

TEST_CASE("edge-list diagnostics carry line and column") {
    auto expect_error = [](std::string_view text, int line) {
        try {
            parse_edge_list(text);
            FAIL("expected a parse error for: " << std::string(text));
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column >= 1);
        }
    };
    expect_error("", 1);                          // missing header
    expect_error("x 3\n", 1);                     // bad vertex count
    expect_error("3\n", 1);                       // header too short
    expect_error("3 1 9\n0 1\n", 1);              // header too long
    expect_error("3 1\n0 3\n", 2);                // endpoint out of range
    expect_error("3 1\n1 1\n", 2);                // loop
    expect_error("3 2\n0 1\n0 1\n", 3);           // duplicate
    expect_error("3 1\n0 1\n1 2\n", 3);           // too many edges
    expect_error("3 2\n0 1\n", 3);                // too few edges, reported at EOF
    expect_error("2000000000 0\n", 1);            // over the adjacency size limit
    expect_error("3 1\n0 1 2\n", 2);              // edge line too long
}

TEST_CASE("parsers reject garbage without crashing") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> len(0, 60);
    const std::string alphabet = "0123456789 \t\n#-ab?";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    for (int iter = 0; iter < 2000; ++iter) {
        std::string text;
        const int L = len(rng);
        for (int i = 0; i < L; ++i) text.push_back(alphabet[pick(rng)]);
        try {
            const Graph g = parse_edge_list(text);
            CHECK(parse_edge_list(format_edge_list(g)) == g);
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
            CHECK(e.column >= 1);
        }
        try {
            (void)parse_graph6(text);
        } catch (const ParseError&) {
        } catch (const std::length_error&) {
        }
    }
}

TEST_CASE("graph6 reader on known encodings") {
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == make(2, {{0, 1}}));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 reader agrees with an independent encoder") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = iter % 13;
        const Graph g = random_graph(n, 0.5, rng);
        CHECK(parse_graph6(graph6_encode(g)) == g);
    }
    // a couple of sizes near the 6-bit group boundaries
    for (int n : {4, 12, 13, 30, 62}) {
        const Graph g = random_graph(n, 0.3, rng);
        CHECK(parse_graph6(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 reader rejects what it does not support") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);    // sparse6
    CHECK_THROWS_AS(parse_graph6("&B"), ParseError);        // digraph6
    CHECK_THROWS_AS(parse_graph6("\x7e\x7e??"), std::length_error);  // > 62 vertices
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);         // truncated body
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);       // oversized body
}
