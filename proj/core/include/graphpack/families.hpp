#pragma once

#include "graphpack/graph.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace gpk {

enum class Family { Matching, Star, CompleteBipartite, CliquePlusIsolated };

struct FamilySpec {
    Family family = Family::Matching;
    int n = 0;  // vertex count
    int s = 0;  // CompleteBipartite: one part size
    int k = 0;  // CliquePlusIsolated: clique size
};

// The named graph on n vertices: (n/2) disjoint edges; a star centered at 0;
// K_{s,n-s} with parts {0..s-1} and {s..n-1}; K_k on {0..k-1} plus isolated
// vertices. Parameter ranges are validated.
Graph generate(const FamilySpec& spec);

struct Augmentation {
    Graph tree;
    std::vector<Edge> added;
};

// Grows a forest into a spanning tree without changing its excess-leaf count:
// joins leaves of distinct nontrivial components until one remains, then
// attaches isolated vertices to a leaf one at a time. An edgeless input is
// bootstrapped with the edge 0-1. Each step re-checks the invariant.
Augmentation augment_forest_to_tree(const Graph& f);

// Every acyclic edge-subset of K_n exactly once (n <= 7).
void enumerate_labeled_forests(int n, const std::function<void(const Graph&)>& yield);

// All graphs on n vertices with max degree <= dmax, up to isomorphism,
// in canonical form sorted by canonical code (n <= 8).
std::vector<Graph> enumerate_graphs_bounded_degree(int n, int dmax);

// Convenience: every graph on n vertices up to isomorphism.
std::vector<Graph> enumerate_graphs_up_to_iso(int n);

// Forests on n vertices up to isomorphism, canonical forms.
std::vector<Graph> enumerate_forests_up_to_iso(int n);

// Structural family recognizers (exact, O(n^2) or better).
bool is_perfect_matching(const Graph& g);   // 1-regular
bool is_star(const Graph& g);               // K_{1,n-1}, n >= 2
// (s, n-s) with s <= n-s when g is complete bipartite, otherwise nullopt.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);
bool contains_clique(const Graph& g, int k);

}  // namespace gpk
