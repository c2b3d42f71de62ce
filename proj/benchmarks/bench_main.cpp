#include <benchmark/benchmark.h>

#include "graphpack/conditions.hpp"
#include "graphpack/families.hpp"
#include "graphpack/graph.hpp"
#include "graphpack/packing.hpp"
#include "graphpack/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace {

gpk::Graph random_matching(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    gpk::Graph g(n);
    for (int i = 0; i + 1 < n; i += 2) g.add_edge(order[i], order[i + 1]);
    return g;
}

// Pruefer decode; degrees stay small, so the incremental guarantee applies.
gpk::Graph random_tree(int n, std::mt19937_64& rng) {
    gpk::Graph t(n);
    if (n < 2) return t;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(rng);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<bool> used(n, false);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        t.add_edge(leaf, s);
        used[leaf] = true;
        --degree[s];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) (a == -1 ? a : b) = v;
    t.add_edge(a, b);
    return t;
}

gpk::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    gpk::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

void BM_PackIncremental(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const gpk::Graph g = random_matching(n, rng);
    const gpk::Graph h = random_tree(n, rng);
    for (auto _ : state) {
        gpk::PackOutcome out = gpk::pack_incremental(g, h);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_PackIncremental)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_PackExactSmall(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<std::pair<gpk::Graph, gpk::Graph>> instances;
    for (int i = 0; i < 64; ++i)
        instances.emplace_back(random_graph(7, 0.4, rng), random_graph(7, 0.4, rng));
    size_t i = 0;
    for (auto _ : state) {
        gpk::PackOutcome out = gpk::pack_exact(instances[i].first, instances[i].second);
        benchmark::DoNotOptimize(out);
        i = (i + 1) % instances.size();
    }
}
BENCHMARK(BM_PackExactSmall);

void BM_Degeneracy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    const gpk::Graph g = random_graph(n, 8.0 / n, rng);
    for (auto _ : state) {
        gpk::DegeneracyResult r = gpk::degeneracy(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Degeneracy)->Arg(256)->Arg(1024);

void BM_LinksFrom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    const gpk::Graph g = random_graph(n, 4.0 / n, rng);
    const gpk::Graph h = random_graph(n, 4.0 / n, rng);
    std::vector<int> fwd(n);
    std::iota(fwd.begin(), fwd.end(), 0);
    std::shuffle(fwd.begin(), fwd.end(), rng);
    const gpk::Mapping m(fwd);
    for (auto _ : state) {
        for (int u = 0; u < n; u += 17) {
            auto links = gpk::links_from(g, h, m, u);
            benchmark::DoNotOptimize(links);
        }
    }
}
BENCHMARK(BM_LinksFrom)->Arg(256)->Arg(1024);

void BM_CanonicalCode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    const gpk::Graph g = random_graph(n, 0.4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gpk::canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8);

void BM_EnumerateForestClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = gpk::enumerate_forests_up_to_iso(n);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_EnumerateForestClasses)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
