#pragma once

#include "graphpack/graph.hpp"

#include <map>
#include <string>

namespace gpk {

enum class ConditionTag { SauerSpencer, Brandt, BrandtForest, DegSS, OnlySharp };

// Evaluated hypothesis of one packing condition. `holds` is lhs < rhs,
// except OnlySharp which uses lhs <= rhs. `detail` carries the named
// intermediate quantities so the verdict can be recomputed independently.
struct ConditionReport {
    ConditionTag tag = ConditionTag::SauerSpencer;
    long long lhs = 0;
    int rhs = 0;  // always n
    bool holds = false;
    std::map<std::string, long long> detail;
};

// 2*maxdeg(G)*maxdeg(H) < n.
ConditionReport sauer_spencer_holds(const Graph& g, const Graph& h);

// 3*maxdeg(G) + leaves(T) - 2 < n, for trees with at least one edge.
ConditionReport brandt_tree_holds(const Graph& g, const Graph& t);

// 3*maxdeg(G) + excess_leaves(F) < n, for forests.
ConditionReport brandt_forest_holds(const Graph& g, const Graph& f);

// Degree-sequence condition: the top maxdeg(G) entries of H's degree
// sequence plus the top c entries of G's, where c = degeneracy(H), summed,
// must be < n.
ConditionReport degss_holds(const Graph& g, const Graph& h);

// Checks that the degree-sequence lhs never exceeds the Sauer-Spencer lhs,
// and for trees (n >= 2) never exceeds the Brandt lhs.
bool degss_dominates_checks(const Graph& g, const Graph& h);

enum class SharpnessVerdict { PacksGuaranteed, ExceptionalPair, HypothesisFails };

// Classifies (g, f) against 3*maxdeg(G) + excess_leaves(F) <= n: the pair is
// guaranteed to pack unless it is the matching/star exception (n even,
// g a perfect matching, f a star).
SharpnessVerdict onlysharpness_classify(const Graph& g, const Graph& f);
ConditionReport onlysharp_report(const Graph& g, const Graph& f);

const char* to_string(SharpnessVerdict v);

}  // namespace gpk
