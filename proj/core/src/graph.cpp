#include "graphpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpk {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count exceeds the bitset-adjacency limit");
    n_ = n;
    adj_.assign(n, Bitset(n));
    deg_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    out.reserve(deg_[v]);
    adj_[v].for_each([&](int u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
    return d;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.size());
    for (int v = 0; v < g.size(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.size();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);

    DegeneracyResult res;
    res.ordering.resize(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        res.degeneracy = std::max(res.degeneracy, deg[pick]);
        removed[pick] = true;
        g.neighbors(pick).for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
        res.ordering[n - 1 - step] = pick;  // reverse removal order
    }
    return res;
}

bool is_forest(const Graph& g) {
    // Union-find; any edge joining an already-connected pair closes a cycle.
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

static void require_forest(const Graph& f, const char* op) {
    if (!is_forest(f))
        throw std::domain_error(std::string(op) + ": input graph is not a forest");
}

int excess_leaves(const Graph& f) {
    require_forest(f, "excess_leaves");
    int total = 0;
    for (int v = 0; v < f.size(); ++v) total += std::max(f.degree(v) - 2, 0);
    return total;
}

ForestShape leaves_and_nontrivial_components(const Graph& f) {
    require_forest(f, "leaves_and_nontrivial_components");
    ForestShape shape;
    std::vector<int> parent(f.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : f.edges()) parent[find(u)] = find(v);
    std::vector<int> size(f.size(), 0);
    for (int v = 0; v < f.size(); ++v) ++size[find(v)];
    for (int v = 0; v < f.size(); ++v) {
        if (f.degree(v) == 1) ++shape.leaves;
        if (parent[v] == v && size[v] >= 2) ++shape.nontrivial_components;
    }
    return shape;
}

Graph complement(const Graph& g) {
    Graph c(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

namespace {

constexpr int kCanonicalMaxN = 10;

// Upper-triangle bits of g relabeled by perm (perm[i] = original vertex at
// position i), packed with pair (0,1) as the most significant bit so that
// integer order equals lexicographic bitstring order.
uint64_t triangle_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.size();
    const int bits = n * (n - 1) / 2;
    uint64_t code = 0;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (g.has_edge(perm[i], perm[j])) code |= uint64_t{1} << (bits - 1 - k);
    return code;
}

void check_canonical_size(const Graph& g) {
    if (g.size() > kCanonicalMaxN)
        throw std::length_error("canonical_key: supported only for n <= 10");
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
    check_canonical_size(g);
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = triangle_code(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, triangle_code(g, perm));
    return best;
}

std::string canonical_key(const Graph& g) {
    const uint64_t code = canonical_code(g);
    const int bits = g.size() * (g.size() - 1) / 2;
    std::string key;
    key.push_back(static_cast<char>(g.size()));
    for (int shift = ((bits + 7) / 8) * 8 - 8; shift >= 0; shift -= 8)
        key.push_back(static_cast<char>((code >> shift) & 0xff));
    return key;
}

Graph graph_from_triangle_code(int n, uint64_t code) {
    const int bits = n * (n - 1) / 2;
    Graph out(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((code >> (bits - 1 - k)) & 1) out.add_edge(i, j);
    return out;
}

Graph canonical_form(const Graph& g) {
    return graph_from_triangle_code(g.size(), canonical_code(g));
}

}  // namespace gpk
