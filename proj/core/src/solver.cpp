#include "graphpack/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gpk {

static void require_same_order(const Graph& g, const Graph& h) {
    if (g.size() != h.size())
        throw std::domain_error("solver: graphs must have the same vertex count");
}

#ifndef NDEBUG
// Sorted degree sequence of `partial` must stay entrywise below h's while
// edges are being inserted.
static bool dominated_by(const Graph& partial, const Graph& h) {
    DegreeSequence dp = degree_sequence(partial), dh = degree_sequence(h);
    for (size_t i = 0; i < dp.size(); ++i)
        if (dp[i] > dh[i]) return false;
    return true;
}
#endif

PackOutcome pack_incremental(const Graph& g, const Graph& h) {
    require_same_order(g, h);
    const int n = g.size();
    PackOutcome out;

    const DegeneracyResult dr = degeneracy(h);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[dr.ordering[i]] = i;

    Mapping m = Mapping::identity(n);
    Graph partial(n);  // identity packs with an edgeless H

    for (int i = 0; i < n; ++i) {
        const int v = dr.ordering[i];
        std::vector<int> back;  // earlier neighbors, ascending index
        h.neighbors(v).for_each([&](int w) {
            if (pos[w] < i) back.push_back(w);
        });
        assert(static_cast<int>(back.size()) <= dr.degeneracy);

        for (int w : back) {
            partial.add_edge(v, w);
            ++out.stats.edges_inserted;
            assert(dominated_by(partial, h));

            const int u = m.preimage(v);
            const int x = m.preimage(w);
            if (!g.has_edge(u, x)) continue;

            // The inserted edge is the only conflict; repair from u, whose
            // current H-degree is bounded by the degeneracy.
            Quasipacking qp(g, partial, m, Conflict{std::min(u, x), std::max(u, x)});
            const std::vector<int> targets = link_free_targets(g, partial, qp, u);
            if (targets.empty()) {
                out.status = PackStatus::NotGuaranteed;
                return out;
            }
            m.swap_images(u, targets.front());
            ++out.stats.swaps;
            assert(conflicts(g, partial, m).empty());
        }
    }

    assert(partial.edge_count() == h.edge_count());
    if (!is_packing(g, h, m))
        throw std::logic_error("pack_incremental: produced mapping failed verification");
    out.status = PackStatus::Packed;
    out.mapping = std::move(m);
    return out;
}

namespace {

struct ExactSearch {
    const Graph& g;
    const Graph& h;
    int n;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    std::vector<int> order;                // G-vertices, degree descending
    std::vector<std::vector<int>> preds;   // earlier order positions adjacent in G
    std::vector<Bitset> deg_ok;            // images with enough H-non-neighbors
    std::vector<Bitset> non_adj;           // complement rows of H
    std::vector<int> img;                  // image per order position
    Bitset unused;

    ExactSearch(const Graph& g_, const Graph& h_, long long budget_)
        : g(g_), h(h_), n(g_.size()), budget(budget_), img(n, -1), unused(n) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        preds.resize(n);
        for (int i = 0; i < n; ++i)
            g.neighbors(order[i]).for_each([&](int w) {
                if (pos[w] < i) preds[i].push_back(pos[w]);
            });
        deg_ok.assign(n, Bitset(n));
        non_adj.assign(n, Bitset(n));
        for (int w = 0; w < n; ++w) {
            for (int i = 0; i < n; ++i)
                if (g.degree(order[i]) <= n - 1 - h.degree(w)) deg_ok[i].set(w);
            non_adj[w].set_all();
            non_adj[w].reset(w);
            non_adj[w].setminus(h.neighbors(w));
        }
        unused.set_all();
    }

    bool search(int depth) {
        if (depth == n) return true;
        Bitset allowed = unused;
        allowed &= deg_ok[depth];
        for (int p : preds[depth]) allowed &= non_adj[img[p]];
        for (int w = allowed.next(-1); w != -1; w = allowed.next(w)) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            img[depth] = w;
            unused.reset(w);
            if (search(depth + 1)) return true;
            unused.set(w);
            if (exceeded) return false;
        }
        img[depth] = -1;
        return false;
    }
};

}  // namespace

PackOutcome pack_exact(const Graph& g, const Graph& h, long long budget) {
    require_same_order(g, h);
    PackOutcome out;
    ExactSearch s(g, h, budget);
    const bool found = s.search(0);
    out.stats.nodes_explored = s.nodes;
    if (found) {
        std::vector<int> forward(g.size());
        for (int i = 0; i < g.size(); ++i) forward[s.order[i]] = s.img[i];
        Mapping m(std::move(forward));
        if (!is_packing(g, h, m))
            throw std::logic_error("pack_exact: produced mapping failed verification");
        out.status = PackStatus::Packed;
        out.mapping = std::move(m);
    } else {
        out.status = s.exceeded ? PackStatus::BudgetExceeded : PackStatus::Impossible;
    }
    return out;
}

bool certify_nonpacking_star_matching(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.size() < 2) return false;
    bool dominating = false;
    for (int v = 0; v < h.size() && !dominating; ++v)
        dominating = h.degree(v) == h.size() - 1;
    if (!dominating) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

const char* to_string(PackStatus s) {
    switch (s) {
        case PackStatus::Packed: return "Packed";
        case PackStatus::NotGuaranteed: return "NotGuaranteed";
        case PackStatus::Impossible: return "Impossible";
        case PackStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

}  // namespace gpk
