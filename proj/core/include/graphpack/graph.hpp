#pragma once

#include "graphpack/bitset.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gpk {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Adjacency is one bitset row per
// vertex; rows stay symmetric and loop-free. Values are cheap to copy at the
// sizes this library targets and are treated as immutable once shared.
// Storage is quadratic, so construction rejects n beyond kMaxVertices.
class Graph {
public:
    static constexpr int kMaxVertices = 32768;

    Graph() = default;
    explicit Graph(int n);
    // Validates endpoints and rejects loops; duplicate pairs are idempotent.
    Graph(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);

    int degree(int v) const { return deg_[v]; }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    std::vector<int> neighbor_list(int v) const;

    // All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    int max_degree() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

// Vertex degrees in non-increasing order.
using DegreeSequence = std::vector<int>;
DegreeSequence degree_sequence(const Graph& g);

struct DegeneracyResult {
    int degeneracy = 0;
    // Every vertex has at most `degeneracy` neighbors earlier in the list.
    std::vector<int> ordering;
};

// Min-degree peeling (smallest index among ties); the ordering is the reverse
// removal order and the degeneracy is the largest degree seen at removal.
DegeneracyResult degeneracy(const Graph& g);

bool is_forest(const Graph& g);

// Sum of max(deg(v)-2, 0) over all vertices. Forests only.
int excess_leaves(const Graph& f);

struct ForestShape {
    int leaves = 0;                  // vertices of degree exactly 1
    int nontrivial_components = 0;   // components with at least 2 vertices
};
ForestShape leaves_and_nontrivial_components(const Graph& f);

Graph complement(const Graph& g);

// Isomorphism-invariant key for n <= 10: byte 0 is n, the rest is the
// lexicographically minimal upper-triangle adjacency bitstring over all
// vertex permutations, packed big-endian.
std::string canonical_key(const Graph& g);

// The minimal triangle bitstring as an integer (fits in 64 bits for n <= 10).
uint64_t canonical_code(const Graph& g);

// Rebuilds a graph from a packed upper-triangle bitstring (inverse of the
// code layout used by canonical_code).
Graph graph_from_triangle_code(int n, uint64_t code);

// The relabeling of g that attains canonical_code(g).
Graph canonical_form(const Graph& g);

}  // namespace gpk
