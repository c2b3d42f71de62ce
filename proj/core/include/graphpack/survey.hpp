#pragma once

#include "graphpack/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpk {

// theorem5:  all pairs (G, F) up to isomorphism with
//            3*maxdeg(G) + excess_leaves(F) <= n that fail to pack.
// question1: degree-sequence-condition equality pairs (lhs == n) that fail
//            to pack, diffed against the known extremal families.
// question2: pairs (G, F) with 3*maxdeg(G) + excess_leaves(F) == n and
//            n odd or maxdeg(G) >= 2 that fail to pack (evidence gathering;
//            nothing is asserted about the outcome).
enum class SurveyScope { Theorem5, Question1, Question2 };

struct SurveyOptions {
    int jobs = 1;                      // worker threads for the packing decisions
    long long budget = 100'000'000;    // per-pair exact-search node limit
    std::optional<long long> sample;   // sample this many labeled pairs instead
                                       // of enumerating classes (needed for n in 7..8)
    uint64_t seed = 0;                 // sampling seed
};

struct SurveyFinding {
    Graph g;
    Graph h;             // the forest side for theorem5/question2
    long long lhs = 0;   // value of the scope's condition
    bool listed = false; // question1: pair belongs to a known extremal family
    std::string family;  // which family, when listed
    std::string verdict; // theorem5: sharpness classification of the pair
};

struct SurveyResult {
    SurveyScope scope = SurveyScope::Theorem5;
    int n = 0;
    bool sampled = false;
    long long pairs_examined = 0;
    long long undecided = 0;  // pairs whose exact search hit the node budget
    std::vector<SurveyFinding> findings;  // sorted by canonical keys, deduplicated
};

// Exhaustive for n <= 6; n = 7, 8 require options.sample. Deterministic at
// fixed options, independent of the job count.
SurveyResult run_survey(SurveyScope scope, int n, const SurveyOptions& opts = {});

// Findings document, stable byte-for-byte across runs at fixed options.
std::string format_survey(const SurveyResult& r);

const char* to_string(SurveyScope s);
std::optional<SurveyScope> survey_scope_from_string(std::string_view s);

}  // namespace gpk
