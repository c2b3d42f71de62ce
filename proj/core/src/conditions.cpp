#include "graphpack/conditions.hpp"

#include "graphpack/families.hpp"

#include <cassert>
#include <stdexcept>

namespace gpk {

static void require_same_order(const Graph& g, const Graph& h) {
    if (g.size() != h.size())
        throw std::domain_error("conditions: graphs must have the same vertex count");
}

static long long top_sum(const DegreeSequence& d, int k) {
    assert(k <= static_cast<int>(d.size()));
    long long s = 0;
    for (int i = 0; i < k; ++i) s += d[i];
    return s;
}

ConditionReport sauer_spencer_holds(const Graph& g, const Graph& h) {
    require_same_order(g, h);
    ConditionReport r;
    r.tag = ConditionTag::SauerSpencer;
    const int dg = g.max_degree(), dh = h.max_degree();
    r.lhs = 2LL * dg * dh;
    r.rhs = g.size();
    r.holds = r.lhs < r.rhs;
    r.detail = {{"delta_g", dg}, {"delta_h", dh}};
    return r;
}

ConditionReport brandt_tree_holds(const Graph& g, const Graph& t) {
    require_same_order(g, t);
    if (!is_forest(t) || t.edge_count() != t.size() - 1 || t.size() < 2)
        throw std::domain_error("brandt_tree_holds: second graph must be a tree with >= 2 vertices");
    ConditionReport r;
    r.tag = ConditionTag::Brandt;
    const int dg = g.max_degree();
    const int leaves = leaves_and_nontrivial_components(t).leaves;
    r.lhs = 3LL * dg + leaves - 2;
    r.rhs = g.size();
    r.holds = r.lhs < r.rhs;
    r.detail = {{"delta_g", dg}, {"leaves", leaves}};
    return r;
}

ConditionReport brandt_forest_holds(const Graph& g, const Graph& f) {
    require_same_order(g, f);
    ConditionReport r;
    r.tag = ConditionTag::BrandtForest;
    const int dg = g.max_degree();
    const int excess = excess_leaves(f);  // rejects non-forests
    r.lhs = 3LL * dg + excess;
    r.rhs = g.size();
    r.holds = r.lhs < r.rhs;
    r.detail = {{"delta_g", dg}, {"excess_leaves", excess}};
    return r;
}

ConditionReport degss_holds(const Graph& g, const Graph& h) {
    require_same_order(g, h);
    ConditionReport r;
    r.tag = ConditionTag::DegSS;
    const int dg = g.max_degree();
    const int dh = h.max_degree();
    const int c = degeneracy(h).degeneracy;
    const long long sum_top_h = top_sum(degree_sequence(h), dg);
    const long long sum_top_g = top_sum(degree_sequence(g), c);
    r.lhs = sum_top_h + sum_top_g;
    r.rhs = g.size();
    r.holds = r.lhs < r.rhs;
    r.detail = {{"delta_g", dg},
                {"delta_h", dh},
                {"c", c},
                {"sum_top_h", sum_top_h},
                {"sum_top_g", sum_top_g},
                {"bec", (dg + 1LL) * (dh + 1LL)}};
    return r;
}

bool degss_dominates_checks(const Graph& g, const Graph& h) {
    require_same_order(g, h);
    const long long dlhs = degss_holds(g, h).lhs;
    if (dlhs > sauer_spencer_holds(g, h).lhs) return false;
    // Tree comparison; a one-vertex "tree" has no leaves and is skipped.
    if (h.size() >= 2 && is_forest(h) && h.edge_count() == h.size() - 1)
        if (dlhs > brandt_tree_holds(g, h).lhs) return false;
    return true;
}

ConditionReport onlysharp_report(const Graph& g, const Graph& f) {
    ConditionReport r = brandt_forest_holds(g, f);
    r.tag = ConditionTag::OnlySharp;
    r.holds = r.lhs <= r.rhs;  // non-strict form
    return r;
}

SharpnessVerdict onlysharpness_classify(const Graph& g, const Graph& f) {
    const ConditionReport r = onlysharp_report(g, f);
    if (!r.holds) return SharpnessVerdict::HypothesisFails;
    if (g.size() % 2 == 0 && is_perfect_matching(g) && is_star(f))
        return SharpnessVerdict::ExceptionalPair;
    return SharpnessVerdict::PacksGuaranteed;
}

const char* to_string(SharpnessVerdict v) {
    switch (v) {
        case SharpnessVerdict::PacksGuaranteed: return "PacksGuaranteed";
        case SharpnessVerdict::ExceptionalPair: return "ExceptionalPair";
        case SharpnessVerdict::HypothesisFails: return "HypothesisFails";
    }
    return "?";
}

}  // namespace gpk
