#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphpack/families.hpp"
#include "graphpack/graph.hpp"
#include "testutil.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace gpk;
using namespace testutil;

TEST_CASE("graph construction") {
    const Graph empty(0, {});
    CHECK(empty.size() == 0);
    CHECK(empty.edge_count() == 0);

    const Graph m6 = make(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(m6.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(m6.degree(v) == 1);

    const Graph star = make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(star.degree(0) == 5);
    CHECK(star.edge_count() == 5);

    CHECK_THROWS_AS(make(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{1, 1}}), std::invalid_argument);

    // duplicates are idempotent
    const Graph dup = make(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1), std::invalid_argument);
}

TEST_CASE("degree sequence") {
    CHECK(degree_sequence(make(6, {{0, 1}, {2, 3}, {4, 5}})) ==
          DegreeSequence{1, 1, 1, 1, 1, 1});
    CHECK(degree_sequence(make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) ==
          DegreeSequence{5, 1, 1, 1, 1, 1});
    CHECK(degree_sequence(path_graph(6)) == DegreeSequence{2, 2, 2, 2, 1, 1});

    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        const Graph g = random_graph(2 + iter % 12, 0.4, rng);
        const DegreeSequence d = degree_sequence(g);
        CHECK(std::is_sorted(d.rbegin(), d.rend()));
        CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.edge_count());
    }
}

TEST_CASE("degeneracy basics") {
    CHECK(degeneracy(make(6, {{0, 1}, {2, 3}, {4, 5}})).degeneracy == 1);
    CHECK(degeneracy(path_graph(7)).degeneracy == 1);
    CHECK(degeneracy(Graph(5)).degeneracy == 0);
    CHECK(degeneracy(complete_graph(4)).degeneracy == 3);
    CHECK(degeneracy(cycle_graph(6)).degeneracy == 2);
}

TEST_CASE("degeneracy ordering witness and minimality") {
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + iter % 7;
        const Graph g = random_graph(n, 0.5, rng);
        const DegeneracyResult r = degeneracy(g);
        CHECK(r.degeneracy <= g.max_degree());

        // ordering is a permutation with back-degree <= c
        std::set<int> seen;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) {
            seen.insert(r.ordering[i]);
            pos[r.ordering[i]] = i;
        }
        CHECK(static_cast<int>(seen.size()) == n);
        for (int i = 0; i < n; ++i) {
            int back = 0;
            for (int w : g.neighbor_list(r.ordering[i]))
                if (pos[w] < i) ++back;
            CHECK(back <= r.degeneracy);
        }

        // minimal c: equals the max over subsets of the induced min degree
        CHECK(r.degeneracy == degeneracy_bruteforce(g));
    }
}

TEST_CASE("forest detection") {
    CHECK(is_forest(make(6, {{0, 1}, {2, 3}, {4, 5}})));
    CHECK_FALSE(is_forest(cycle_graph(6)));
    CHECK(is_forest(make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));
    CHECK(is_forest(Graph(0)));

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        const Graph g = random_graph(1 + iter % 8, 0.3, rng);
        CHECK(is_forest(g) == acyclic_dfs(g));
    }
}

TEST_CASE("excess leaves") {
    CHECK(excess_leaves(path_graph(6)) == 0);
    CHECK(excess_leaves(make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 3);
    // spider with three legs of length 2
    const Graph spider = make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(excess_leaves(spider) == 1);
    CHECK(excess_leaves(Graph(0)) == 0);
    CHECK_THROWS_AS(excess_leaves(cycle_graph(4)), std::domain_error);
}

TEST_CASE("leaves and nontrivial components") {
    const ForestShape m = leaves_and_nontrivial_components(make(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(m.leaves == 6);
    CHECK(m.nontrivial_components == 3);

    const ForestShape s =
        leaves_and_nontrivial_components(make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
    CHECK(s.leaves == 5);
    CHECK(s.nontrivial_components == 1);

    Graph p6k1(7);
    for (int v = 0; v + 1 < 6; ++v) p6k1.add_edge(v, v + 1);
    const ForestShape p = leaves_and_nontrivial_components(p6k1);
    CHECK(p.leaves == 2);
    CHECK(p.nontrivial_components == 1);

    CHECK_THROWS_AS(leaves_and_nontrivial_components(cycle_graph(3)), std::domain_error);
}

TEST_CASE("excess leaves identity on all small forests") {
    // excess = leaves - 2 * nontrivial components, and leaves - 2 on trees
    for (int n = 0; n <= 6; ++n) {
        enumerate_labeled_forests(n, [&](const Graph& f) {
            const ForestShape shape = leaves_and_nontrivial_components(f);
            CHECK(excess_leaves(f) == shape.leaves - 2 * shape.nontrivial_components);
            if (n >= 2 && f.edge_count() == n - 1)
                CHECK(excess_leaves(f) == shape.leaves - 2);
        });
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(5)).edge_count() == 0);

    const Graph c = complement(make(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(c.edge_count() == 12);  // complete tripartite K_{2,2,2}
    for (int v = 0; v < 6; ++v) CHECK(c.degree(v) == 4);

    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 100; ++iter) {
        const Graph g = random_graph(1 + iter % 9, 0.5, rng);
        const Graph cc = complement(complement(g));
        CHECK(cc == g);
        for (int v = 0; v < g.size(); ++v)
            CHECK(complement(g).degree(v) == g.size() - 1 - g.degree(v));
    }
}

TEST_CASE("canonical key") {
    const Graph p4 = path_graph(4);
    const Graph p4_relabled = relabel(p4, {2, 0, 3, 1});
    CHECK(canonical_key(p4) == canonical_key(p4_relabled));

    const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_key(p4) != canonical_key(claw));

    CHECK(canonical_key(Graph(3)) == canonical_key(Graph(3)));
    CHECK(canonical_key(Graph(3)) != canonical_key(Graph(4)));

    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 1 + iter % 7;
        const Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }

    CHECK_THROWS_AS(canonical_key(Graph(11)), std::length_error);
}
