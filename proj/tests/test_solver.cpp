#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphpack/conditions.hpp"
#include "graphpack/families.hpp"
#include "graphpack/solver.hpp"
#include "testutil.hpp"

#include <random>

using namespace gpk;
using namespace testutil;

namespace {
const Graph m6 = make(6, {{0, 1}, {2, 3}, {4, 5}});
const Graph star6 = make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
}  // namespace

TEST_CASE("incremental solver on easy and extremal pairs") {
    PackOutcome out = pack_incremental(m6, path_graph(6));
    REQUIRE(out.status == PackStatus::Packed);
    CHECK(is_packing(m6, path_graph(6), *out.mapping));
    CHECK(out.stats.edges_inserted == 5);

    out = pack_incremental(Graph(1), Graph(1));
    CHECK(out.status == PackStatus::Packed);
    CHECK(out.stats.swaps == 0);

    out = pack_incremental(complete_graph(4), Graph(4));
    CHECK(out.status == PackStatus::Packed);
    CHECK(out.mapping->forward() == std::vector<int>{0, 1, 2, 3});
    CHECK(out.stats.swaps == 0);

    out = pack_incremental(m6, star6);
    CHECK(out.status == PackStatus::NotGuaranteed);
    CHECK_FALSE(out.mapping.has_value());

    CHECK_THROWS_AS(pack_incremental(Graph(3), Graph(4)), std::domain_error);
}

TEST_CASE("incremental solver is deterministic") {
    const PackOutcome a = pack_incremental(m6, path_graph(6));
    const PackOutcome b = pack_incremental(m6, path_graph(6));
    REQUIRE(a.status == PackStatus::Packed);
    REQUIRE(b.status == PackStatus::Packed);
    CHECK(*a.mapping == *b.mapping);
    CHECK(a.stats.swaps == b.stats.swaps);
}

TEST_CASE("exact solver on the extremal families") {
    CHECK(pack_exact(m6, star6).status == PackStatus::Impossible);
    const Graph k33 = generate({Family::CompleteBipartite, 6, 3, 0});
    CHECK(pack_exact(m6, k33).status == PackStatus::Impossible);

    const PackOutcome c6 = pack_exact(cycle_graph(6), cycle_graph(6));
    REQUIRE(c6.status == PackStatus::Packed);
    CHECK(is_packing(cycle_graph(6), cycle_graph(6), *c6.mapping));

    CHECK_THROWS_AS(pack_exact(Graph(3), Graph(4)), std::domain_error);
}

TEST_CASE("exact solver budget") {
    const PackOutcome out = pack_exact(m6, star6, 2);
    CHECK(out.status == PackStatus::BudgetExceeded);
    CHECK(out.stats.nodes_explored == 3);  // the node over the limit is counted

    // a generous budget still reports the true refutation
    CHECK(pack_exact(m6, star6, 1000000).status == PackStatus::Impossible);
}

TEST_CASE("exact solver witness is deterministic") {
    const PackOutcome a = pack_exact(m6, path_graph(6));
    const PackOutcome b = pack_exact(m6, path_graph(6));
    REQUIRE(a.status == PackStatus::Packed);
    CHECK(*a.mapping == *b.mapping);
}

TEST_CASE("star/matching certificate") {
    CHECK(certify_nonpacking_star_matching(m6, star6));
    CHECK_FALSE(certify_nonpacking_star_matching(m6, path_graph(6)));

    // not 1-regular: certificate does not apply, and the pair in fact packs
    const Graph g = make(6, {{0, 1}, {2, 3}});
    CHECK_FALSE(certify_nonpacking_star_matching(g, star6));
    CHECK(pack_exact(g, star6).status == PackStatus::Packed);

    // certified pairs really are non-packing
    for (int n : {2, 4, 6, 8}) {
        const Graph m = generate({Family::Matching, n, 0, 0});
        const Graph s = generate({Family::Star, n, 0, 0});
        CHECK(certify_nonpacking_star_matching(m, s));
        CHECK(pack_exact(m, s).status == PackStatus::Impossible);
    }
}

TEST_CASE("condition-true pairs always pack incrementally (small exhaustive)") {
    for (int n = 1; n <= 5; ++n) {
        const std::vector<Graph> classes = enumerate_graphs_up_to_iso(n);
        for (const Graph& g : classes)
            for (const Graph& h : classes) {
                if (!degss_holds(g, h).holds) continue;
                const PackOutcome out = pack_incremental(g, h);
                REQUIRE(out.status == PackStatus::Packed);
                CHECK(is_packing(g, h, *out.mapping));
            }
    }
}

TEST_CASE("random agreement between the two solvers") {
    std::mt19937_64 rng(31);
    int packed = 0, impossible = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + iter % 7;
        const Graph g = random_graph(n, 0.35, rng);
        const Graph h = random_graph(n, 0.35, rng);

        const PackOutcome inc = pack_incremental(g, h);
        const PackOutcome ex = pack_exact(g, h);
        REQUIRE(ex.status != PackStatus::BudgetExceeded);

        if (inc.status == PackStatus::Packed) {
            CHECK(is_packing(g, h, *inc.mapping));
            CHECK(ex.status == PackStatus::Packed);
            ++packed;
        }
        if (ex.status == PackStatus::Impossible) {
            CHECK_FALSE(degss_holds(g, h).holds);
            ++impossible;
        }
        if (degss_holds(g, h).holds) CHECK(inc.status == PackStatus::Packed);
    }
    CHECK(packed > 100);
    CHECK(impossible > 20);
}

TEST_CASE("incremental solver at the tight edge of the condition") {
    // lhs == n-1 is the least slack the guarantee can have
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick_n(4, 16);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int tight = 0, attempts = 0;
    while (tight < 2000 && attempts < 1000000) {
        ++attempts;
        const int n = pick_n(rng);
        const double p = unit(rng) * 3.5 / n;
        const Graph g = random_graph(n, p, rng);
        const Graph h = random_graph(n, p, rng);
        const ConditionReport r = degss_holds(g, h);
        if (!r.holds || r.lhs != n - 1) continue;
        ++tight;
        const PackOutcome out = pack_incremental(g, h);
        REQUIRE(out.status == PackStatus::Packed);
        CHECK(is_packing(g, h, *out.mapping));
    }
    CHECK(tight == 2000);
}

TEST_CASE("incremental solver on larger random condition-true pairs") {
    std::mt19937_64 rng(32);
    int solved = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 8 + iter % 23;
        const Graph g = random_graph(n, 1.2 / n, rng);
        const Graph h = random_graph(n, 1.2 / n, rng);
        if (!degss_holds(g, h).holds) continue;
        const PackOutcome out = pack_incremental(g, h);
        REQUIRE(out.status == PackStatus::Packed);
        CHECK(is_packing(g, h, *out.mapping));
        ++solved;
    }
    CHECK(solved > 150);
}
