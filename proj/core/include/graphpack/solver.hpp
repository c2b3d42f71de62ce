#pragma once

#include "graphpack/graph.hpp"
#include "graphpack/packing.hpp"

#include <optional>

namespace gpk {

enum class PackStatus { Packed, NotGuaranteed, Impossible, BudgetExceeded };

struct PackStats {
    long long edges_inserted = 0;
    long long swaps = 0;
    long long nodes_explored = 0;
};

struct PackOutcome {
    PackStatus status = PackStatus::NotGuaranteed;
    std::optional<Mapping> mapping;  // present iff Packed, verified before return
    PackStats stats;
};

// Constructive solver. Inserts H's edges one at a time along a degeneracy
// ordering of H, starting from the identity mapping on an edgeless H; each
// insertion creates at most one conflict, which is repaired by swapping the
// inserted edge's later endpoint with its smallest link-free target. When the
// degree-sequence condition holds this always succeeds; otherwise the repair
// may run out of targets, yielding NotGuaranteed.
PackOutcome pack_incremental(const Graph& g, const Graph& h);

// Exhaustive backtracking over assignments of G-vertices (degree descending,
// ties by index) to H-vertices. Candidate images ascend, so the first witness
// found is search-lexicographically least. Impossible means the whole space
// was refuted; BudgetExceeded means the node limit was hit first.
PackOutcome pack_exact(const Graph& g, const Graph& h, long long budget = 100'000'000);

// Direct non-packing certificate: h has a vertex adjacent to all others and
// g is 1-regular, so the dominating vertex's preimage always conflicts with
// its partner.
bool certify_nonpacking_star_matching(const Graph& g, const Graph& h);

const char* to_string(PackStatus s);

}  // namespace gpk
