#include "graphpack/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gpk {

Graph generate(const FamilySpec& spec) {
    const int n = spec.n;
    if (n < 0) throw std::domain_error("generate: negative vertex count");
    switch (spec.family) {
        case Family::Matching: {
            if (n % 2 != 0) throw std::domain_error("generate: matching needs an even vertex count");
            Graph g(n);
            for (int i = 0; i + 1 < n; i += 2) g.add_edge(i, i + 1);
            return g;
        }
        case Family::Star: {
            if (n < 2) throw std::domain_error("generate: star needs at least 2 vertices");
            Graph g(n);
            for (int v = 1; v < n; ++v) g.add_edge(0, v);
            return g;
        }
        case Family::CompleteBipartite: {
            if (spec.s < 1 || spec.s > n - 1)
                throw std::domain_error("generate: complete bipartite needs 1 <= s <= n-1");
            Graph g(n);
            for (int a = 0; a < spec.s; ++a)
                for (int b = spec.s; b < n; ++b) g.add_edge(a, b);
            return g;
        }
        case Family::CliquePlusIsolated: {
            if (spec.k < 1 || spec.k > n)
                throw std::domain_error("generate: clique size must be in 1..n");
            Graph g(n);
            for (int a = 0; a < spec.k; ++a)
                for (int b = a + 1; b < spec.k; ++b) g.add_edge(a, b);
            return g;
        }
    }
    throw std::domain_error("generate: unknown family");
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
    std::vector<int> id(g.size());
    for (int v = 0; v < g.size(); ++v) id[v] = find(v);
    return id;
}

void add_checked(Graph& t, std::vector<Edge>& added, int a, int b, int expected_excess) {
    t.add_edge(a, b);
    added.emplace_back(std::min(a, b), std::max(a, b));
    if (excess_leaves(t) != expected_excess)
        throw std::logic_error("augment_forest_to_tree: augmentation step changed the excess-leaf count");
}

}  // namespace

Augmentation augment_forest_to_tree(const Graph& f) {
    if (f.size() < 2) throw std::domain_error("augment_forest_to_tree: need at least 2 vertices");
    if (!is_forest(f)) throw std::domain_error("augment_forest_to_tree: input must be a forest");

    Augmentation out;
    Graph& t = out.tree = f;

    if (t.edge_count() == 0) {
        // Bootstrap: two new leaves and one new nontrivial component cancel out.
        add_checked(t, out.added, 0, 1, excess_leaves(f));
    }
    const int excess = excess_leaves(t);

    // Join leaves of distinct nontrivial components until one remains,
    // ordering components by their smallest vertex and picking the
    // smallest-index leaf inside each. The two joined leaves gain degree 2,
    // so the excess-leaf sum is untouched.
    while (true) {
        const std::vector<int> id = component_ids(t);
        // min_leaf[r]: smallest leaf in the component rooted at r
        std::vector<int> min_leaf(t.size(), -1);
        for (int v = 0; v < t.size(); ++v)
            if (t.degree(v) == 1 && min_leaf[id[v]] == -1) min_leaf[id[v]] = v;
        int first_leaf = -1, second_leaf = -1;
        for (int v = 0; v < t.size(); ++v) {  // components in smallest-vertex order
            const int leaf = min_leaf[id[v]];
            if (leaf == -1) continue;  // trivial component
            min_leaf[id[v]] = -1;
            if (first_leaf == -1) {
                first_leaf = leaf;
            } else {
                second_leaf = leaf;
                break;
            }
        }
        if (second_leaf == -1) break;  // at most one nontrivial component left
        add_checked(t, out.added, first_leaf, second_leaf, excess);
    }

    // Attach isolated vertices to the current smallest-index leaf; the leaf
    // gains degree 2 and the new vertex becomes a leaf, again a wash.
    while (true) {
        int isolated = -1, leaf = -1;
        for (int v = 0; v < t.size() && (isolated == -1 || leaf == -1); ++v) {
            if (isolated == -1 && t.degree(v) == 0) isolated = v;
            if (leaf == -1 && t.degree(v) == 1) leaf = v;
        }
        if (isolated == -1) break;
        add_checked(t, out.added, leaf, isolated, excess);
    }

    if (!is_forest(t) || t.edge_count() != t.size() - 1)
        throw std::logic_error("augment_forest_to_tree: result is not a spanning tree");
    return out;
}

void enumerate_labeled_forests(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 0) throw std::domain_error("enumerate_labeled_forests: negative vertex count");
    if (n > 7) throw std::length_error("enumerate_labeled_forests: supported only for n <= 7");

    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Edge> chosen;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](std::vector<int>& p, int v) {
        while (p[v] != v) v = p[v] = p[p[v]];
        return v;
    };

    // Include/exclude each pair; an edge inside one component would close a
    // cycle and is pruned together with its whole subtree of supersets.
    auto rec = [&](auto&& self, size_t idx, std::vector<int>& dsu) -> void {
        if (idx == pairs.size()) {
            yield(Graph(n, chosen));
            return;
        }
        self(self, idx + 1, dsu);
        auto [a, b] = pairs[idx];
        const int ra = find(dsu, a), rb = find(dsu, b);
        if (ra == rb) return;
        std::vector<int> next = dsu;
        next[ra] = rb;
        chosen.push_back(pairs[idx]);
        self(self, idx + 1, next);
        chosen.pop_back();
    };
    rec(rec, 0, parent);
}

std::vector<Graph> enumerate_graphs_bounded_degree(int n, int dmax) {
    if (n < 0) throw std::domain_error("enumerate_graphs_bounded_degree: negative vertex count");
    if (n > 8) throw std::length_error("enumerate_graphs_bounded_degree: supported only for n <= 8");

    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::set<uint64_t> codes;
    std::vector<Edge> chosen;
    std::vector<int> deg(n, 0);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == pairs.size()) {
            codes.insert(canonical_code(Graph(n, chosen)));
            return;
        }
        self(self, idx + 1);
        auto [a, b] = pairs[idx];
        if (deg[a] < dmax && deg[b] < dmax) {
            ++deg[a], ++deg[b];
            chosen.push_back(pairs[idx]);
            self(self, idx + 1);
            chosen.pop_back();
            --deg[a], --deg[b];
        }
    };
    rec(rec, 0);

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (uint64_t code : codes) out.push_back(graph_from_triangle_code(n, code));
    return out;
}

std::vector<Graph> enumerate_graphs_up_to_iso(int n) {
    return enumerate_graphs_bounded_degree(n, n == 0 ? 0 : n - 1);
}

std::vector<Graph> enumerate_forests_up_to_iso(int n) {
    std::set<uint64_t> codes;
    enumerate_labeled_forests(n, [&](const Graph& f) { codes.insert(canonical_code(f)); });
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (uint64_t code : codes) out.push_back(graph_from_triangle_code(n, code));
    return out;
}

bool is_perfect_matching(const Graph& g) {
    if (g.size() < 2) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

bool is_star(const Graph& g) {
    const int n = g.size();
    if (n < 2 || g.edge_count() != n - 1) return false;
    const DegreeSequence d = degree_sequence(g);
    if (d[0] != n - 1) return false;
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != 1) return false;
    return true;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
    if (g.size() < 2) return std::nullopt;
    // g is complete bipartite iff its complement is two disjoint cliques.
    const Graph co = complement(g);
    const std::vector<int> id = component_ids(co);
    std::vector<int> roots;
    for (int v = 0; v < co.size(); ++v)
        if (id[v] == v) roots.push_back(v);
    if (roots.size() != 2) return std::nullopt;
    std::vector<int> size(co.size(), 0);
    for (int v = 0; v < co.size(); ++v) ++size[id[v]];
    for (int v = 0; v < co.size(); ++v)
        if (co.degree(v) != size[id[v]] - 1) return std::nullopt;  // not a clique
    int s = size[roots[0]], t = size[roots[1]];
    if (s > t) std::swap(s, t);
    return std::make_pair(s, t);
}

bool contains_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k == 1) return g.size() >= 1;
    auto rec = [&](auto&& self, Bitset cand, int need) -> bool {
        if (need == 0) return true;
        if (cand.count() < need) return false;
        for (int v = cand.next(-1); v != -1; v = cand.next(v)) {
            cand.reset(v);
            Bitset ext = cand;
            ext &= g.neighbors(v);
            if (self(self, ext, need - 1)) return true;
        }
        return false;
    };
    Bitset all(g.size());
    all.set_all();
    return rec(rec, all, k);
}

}  // namespace gpk
