#include "graphpack/survey.hpp"

#include "graphpack/conditions.hpp"
#include "graphpack/families.hpp"
#include "graphpack/solver.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gpk {

namespace {

struct Candidate {
    Graph g;
    Graph h;
    long long lhs = 0;
};

// Which of the known extremal families (if any) the pair belongs to. All of
// them live on an even number of vertices.
std::string listed_family(const Graph& g, const Graph& h) {
    const int n = g.size();
    if (n % 2 != 0) return "";
    const int half = n / 2;
    if (is_perfect_matching(h)) {
        if (contains_clique(g, half + 1)) return "G>=K(n/2+1);H=matching";
        const auto parts = complete_bipartite_parts(g);
        if (parts && parts->first == half && half % 2 == 1) return "G=K(n/2,n/2);H=matching";
    }
    if (is_perfect_matching(g)) {
        if (contains_clique(h, half + 1)) return "G=matching;H>=K(n/2+1)";
        const auto parts = complete_bipartite_parts(h);
        if (parts && parts->first % 2 == 1) return "G=matching;H=K(s,n-s),s-odd";
    }
    return "";
}

bool scope_accepts(SurveyScope scope, const Graph& g, const Graph& h, long long& lhs) {
    const int n = g.size();
    switch (scope) {
        case SurveyScope::Theorem5:
            lhs = 3LL * g.max_degree() + excess_leaves(h);
            return lhs <= n;
        case SurveyScope::Question2:
            lhs = 3LL * g.max_degree() + excess_leaves(h);
            return lhs == n && (n % 2 == 1 || g.max_degree() >= 2);
        case SurveyScope::Question1:
            lhs = degss_holds(g, h).lhs;
            return lhs == n;
    }
    return false;
}

std::vector<Candidate> exhaustive_candidates(SurveyScope scope, int n) {
    std::vector<Candidate> out;
    if (scope == SurveyScope::Question1) {
        const std::vector<Graph> classes = enumerate_graphs_up_to_iso(n);
        for (const Graph& g : classes)
            for (const Graph& h : classes) {
                long long lhs = 0;
                if (scope_accepts(scope, g, h, lhs)) out.push_back({g, h, lhs});
            }
        return out;
    }
    // The forest scopes force maxdeg(G) <= n/3.
    const std::vector<Graph> gs = enumerate_graphs_bounded_degree(n, n / 3);
    const std::vector<Graph> fs = enumerate_forests_up_to_iso(n);
    for (const Graph& g : gs)
        for (const Graph& f : fs) {
            long long lhs = 0;
            if (scope_accepts(scope, g, f, lhs)) out.push_back({g, f, lhs});
        }
    return out;
}

Graph random_graph_max_degree(int n, int dmax, std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    Graph g(n);
    for (auto [a, b] : pairs)
        if (g.degree(a) < dmax && g.degree(b) < dmax && unit(rng) < p) g.add_edge(a, b);
    return g;
}

Graph random_forest(int n, std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    Graph f(n);
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : pairs) {
        const int ra = find(a), rb = find(b);
        if (ra != rb && unit(rng) < p) {
            parent[ra] = rb;
            f.add_edge(a, b);
        }
    }
    return f;
}

std::vector<Candidate> sampled_candidates(SurveyScope scope, int n, long long count,
                                          uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Candidate> out;
    std::set<std::pair<uint64_t, uint64_t>> seen;
    constexpr int kAttemptsPerSample = 2000;
    for (long long i = 0; i < count; ++i) {
        for (int attempt = 0; attempt < kAttemptsPerSample; ++attempt) {
            Graph g = scope == SurveyScope::Question1
                          ? random_graph_max_degree(n, n - 1, rng)
                          : random_graph_max_degree(n, n / 3, rng);
            Graph h = scope == SurveyScope::Question1 ? random_graph_max_degree(n, n - 1, rng)
                                                      : random_forest(n, rng);
            long long lhs = 0;
            if (!scope_accepts(scope, g, h, lhs)) continue;
            Graph cg = canonical_form(g), ch = canonical_form(h);
            if (!seen.insert({canonical_code(cg), canonical_code(ch)}).second) break;
            out.push_back({std::move(cg), std::move(ch), lhs});
            break;
        }
    }
    return out;
}

}  // namespace

SurveyResult run_survey(SurveyScope scope, int n, const SurveyOptions& opts) {
    if (n < 0) throw std::domain_error("survey: negative vertex count");
    if (opts.jobs < 1) throw std::domain_error("survey: jobs must be >= 1");
    if (n > 8) throw std::length_error("survey: supported only for n <= 8");
    if (n > 6 && !opts.sample)
        throw std::length_error("survey: exhaustive mode supports n <= 6; pass a sample size for n = 7, 8");

    SurveyResult res;
    res.scope = scope;
    res.n = n;
    res.sampled = opts.sample.has_value();

    std::vector<Candidate> cands = res.sampled
                                       ? sampled_candidates(scope, n, *opts.sample, opts.seed)
                                       : exhaustive_candidates(scope, n);
    res.pairs_examined = static_cast<long long>(cands.size());

    // Decide every candidate with the exact solver; 0 = packs, 1 = fails,
    // 2 = budget ran out. Slots are disjoint, so workers need no locking.
    std::vector<signed char> outcome(cands.size(), 0);
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < cands.size(); i = cursor.fetch_add(1)) {
            const PackOutcome po = pack_exact(cands[i].g, cands[i].h, opts.budget);
            outcome[i] = po.status == PackStatus::Impossible       ? 1
                         : po.status == PackStatus::BudgetExceeded ? 2
                                                                   : 0;
        }
    };
    if (opts.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < cands.size(); ++i) {
        if (outcome[i] == 2) {
            ++res.undecided;
            continue;
        }
        if (outcome[i] != 1) continue;
        SurveyFinding f;
        f.g = cands[i].g;
        f.h = cands[i].h;
        f.lhs = cands[i].lhs;
        if (scope == SurveyScope::Question1) {
            f.family = listed_family(f.g, f.h);
            f.listed = !f.family.empty();
        } else if (scope == SurveyScope::Theorem5) {
            f.verdict = to_string(onlysharpness_classify(f.g, f.h));
        }
        res.findings.push_back(std::move(f));
    }

    std::sort(res.findings.begin(), res.findings.end(),
              [](const SurveyFinding& a, const SurveyFinding& b) {
                  const auto ka = std::make_pair(canonical_key(a.g), canonical_key(a.h));
                  const auto kb = std::make_pair(canonical_key(b.g), canonical_key(b.h));
                  return ka < kb;
              });
    return res;
}

namespace {

std::string edges_brief(const Graph& g) {
    std::string out = "[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    out += ']';
    return out;
}

}  // namespace

std::string format_survey(const SurveyResult& r) {
    std::ostringstream out;
    out << "# graphpack survey\n";
    out << "scope=" << to_string(r.scope) << '\n';
    out << "n=" << r.n << '\n';
    out << "mode=" << (r.sampled ? "sampled" : "exhaustive") << '\n';
    out << "pairs_examined=" << r.pairs_examined << '\n';
    out << "nonpacking=" << r.findings.size() << '\n';
    if (r.undecided > 0) out << "undecided=" << r.undecided << '\n';
    for (const SurveyFinding& f : r.findings) {
        out << "finding g=" << edges_brief(f.g) << " h=" << edges_brief(f.h)
            << " lhs=" << f.lhs;
        if (r.scope == SurveyScope::Question1)
            out << " listed=" << (f.listed ? "yes" : "no")
                << " family=" << (f.listed ? f.family : "none");
        if (r.scope == SurveyScope::Theorem5) out << " verdict=" << f.verdict;
        out << '\n';
    }
    return out.str();
}

const char* to_string(SurveyScope s) {
    switch (s) {
        case SurveyScope::Theorem5: return "theorem5";
        case SurveyScope::Question1: return "question1";
        case SurveyScope::Question2: return "question2";
    }
    return "?";
}

std::optional<SurveyScope> survey_scope_from_string(std::string_view s) {
    if (s == "theorem5") return SurveyScope::Theorem5;
    if (s == "question1") return SurveyScope::Question1;
    if (s == "question2") return SurveyScope::Question2;
    return std::nullopt;
}

}  // namespace gpk
