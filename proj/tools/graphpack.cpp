#include "graphpack/conditions.hpp"
#include "graphpack/families.hpp"
#include "graphpack/io.hpp"
#include "graphpack/solver.hpp"
#include "graphpack/survey.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// 0 ok/packed, 2 input error, 3 not guaranteed, 4 proved impossible,
// 5 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotGuaranteed = 3;
constexpr int kExitImpossible = 4;
constexpr int kExitBudget = 5;

gpk::Graph load_graph(const std::string& path, bool graph6) {
    return graph6 ? gpk::read_graph6_file(path) : gpk::read_edge_list_file(path);
}

const char* tag_prefix(gpk::ConditionTag t) {
    using gpk::ConditionTag;
    switch (t) {
        case ConditionTag::SauerSpencer: return "ss";
        case ConditionTag::Brandt: return "brandt";
        case ConditionTag::BrandtForest: return "brandtforest";
        case ConditionTag::DegSS: return "degss";
        case ConditionTag::OnlySharp: return "onlysharp";
    }
    return "?";
}

const char* tag_label(gpk::ConditionTag t) {
    using gpk::ConditionTag;
    switch (t) {
        case ConditionTag::SauerSpencer: return "Sauer-Spencer   2*maxdeg(G)*maxdeg(H) < n";
        case ConditionTag::Brandt: return "Brandt          3*maxdeg(G) + leaves(T) - 2 < n";
        case ConditionTag::BrandtForest: return "Brandt-forest   3*maxdeg(G) + excess_leaves(F) < n";
        case ConditionTag::DegSS: return "degree-sequence top degrees of H and G summed < n";
        case ConditionTag::OnlySharp: return "sharpness       3*maxdeg(G) + excess_leaves(F) <= n";
    }
    return "?";
}

void print_report_kv(std::ostream& out, const gpk::ConditionReport& r) {
    const char* p = tag_prefix(r.tag);
    out << p << ".lhs=" << r.lhs << '\n';
    out << p << ".rhs=" << r.rhs << '\n';
    out << p << ".holds=" << (r.holds ? "true" : "false") << '\n';
    for (const auto& [key, value] : r.detail) out << p << '.' << key << '=' << value << '\n';
}

void print_report_text(std::ostream& out, const gpk::ConditionReport& r) {
    out << tag_label(r.tag) << ": " << r.lhs << " vs n=" << r.rhs << ": "
        << (r.holds ? "holds" : "does not hold") << '\n';
}

int cmd_check(const std::string& gfile, const std::string& hfile, bool graph6,
              const std::string& format) {
    const gpk::Graph g = load_graph(gfile, graph6);
    const gpk::Graph h = load_graph(hfile, graph6);
    if (g.size() != h.size()) {
        std::cerr << "error: graphs have different vertex counts (" << g.size() << " vs "
                  << h.size() << ")\n";
        return kExitInput;
    }

    std::vector<gpk::ConditionReport> reports;
    reports.push_back(gpk::sauer_spencer_holds(g, h));
    reports.push_back(gpk::degss_holds(g, h));
    const bool forest = gpk::is_forest(h);
    if (forest) {
        if (h.size() >= 2 && h.edge_count() == h.size() - 1)
            reports.push_back(gpk::brandt_tree_holds(g, h));
        reports.push_back(gpk::brandt_forest_holds(g, h));
        reports.push_back(gpk::onlysharp_report(g, h));
    }

    if (format == "kv") {
        std::cout << "n=" << g.size() << '\n';
        std::cout << "g.edges=" << g.edge_count() << '\n';
        std::cout << "h.edges=" << h.edge_count() << '\n';
        std::cout << "h.is_forest=" << (forest ? "true" : "false") << '\n';
        for (const auto& r : reports) print_report_kv(std::cout, r);
        if (forest)
            std::cout << "onlysharp.verdict=" << gpk::to_string(gpk::onlysharpness_classify(g, h))
                      << '\n';
    } else {
        std::cout << "n = " << g.size() << ", |E(G)| = " << g.edge_count()
                  << ", |E(H)| = " << h.edge_count() << '\n';
        for (const auto& r : reports) print_report_text(std::cout, r);
        if (forest)
            std::cout << "sharpness classification: "
                      << gpk::to_string(gpk::onlysharpness_classify(g, h)) << '\n';
    }
    return kExitOk;
}

int cmd_pack(const std::string& gfile, const std::string& hfile, const std::string& mode,
             long long budget, bool verify, bool reverse, bool graph6) {
    gpk::Graph g = load_graph(gfile, graph6);
    gpk::Graph h = load_graph(hfile, graph6);
    if (reverse) std::swap(g, h);
    if (g.size() != h.size()) {
        std::cerr << "error: graphs have different vertex counts (" << g.size() << " vs "
                  << h.size() << ")\n";
        return kExitInput;
    }

    const gpk::PackOutcome out = mode == "exact" ? gpk::pack_exact(g, h, budget)
                                                 : gpk::pack_incremental(g, h);
    switch (out.status) {
        case gpk::PackStatus::Packed: {
            const gpk::Mapping& m = *out.mapping;
            if (verify && !gpk::is_packing(g, h, m)) {
                std::cerr << "error: witness failed verification\n";
                return kExitInput;
            }
            for (int v = 0; v < g.size(); ++v) std::cout << v << ' ' << m.image(v) << '\n';
            return kExitOk;
        }
        case gpk::PackStatus::NotGuaranteed:
            std::cerr << "status: NotGuaranteed (try --mode exact)\n";
            return kExitNotGuaranteed;
        case gpk::PackStatus::Impossible:
            std::cerr << "status: Impossible (search space exhausted)\n";
            return kExitImpossible;
        case gpk::PackStatus::BudgetExceeded:
            std::cerr << "status: BudgetExceeded after " << out.stats.nodes_explored
                      << " nodes\n";
            return kExitBudget;
    }
    return kExitInput;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_path) {
    gpk::FamilySpec spec;
    if (family == "matching" && params.size() == 1) {
        spec = {gpk::Family::Matching, params[0], 0, 0};
    } else if (family == "star" && params.size() == 1) {
        spec = {gpk::Family::Star, params[0], 0, 0};
    } else if (family == "cbip" && params.size() == 2) {
        spec = {gpk::Family::CompleteBipartite, params[0] + params[1], params[0], 0};
    } else if (family == "clique" && params.size() == 2) {
        spec = {gpk::Family::CliquePlusIsolated, params[1], 0, params[0]};
    } else {
        std::cerr << "error: usage is gen matching <n> | gen star <n> | gen cbip <s> <t> | "
                     "gen clique <k> <n>\n";
        return kExitInput;
    }
    const gpk::Graph g = gpk::generate(spec);
    if (out_path.empty()) {
        std::cout << gpk::format_edge_list(g);
    } else {
        gpk::write_edge_list_file(g, out_path);
    }
    return kExitOk;
}

int cmd_survey(int n, const std::string& scope_name, const std::string& out_path, int jobs,
               long long budget, std::optional<long long> sample, uint64_t seed) {
    const auto scope = gpk::survey_scope_from_string(scope_name);
    if (!scope) {
        std::cerr << "error: scope must be theorem5, question1 or question2\n";
        return kExitInput;
    }
    gpk::SurveyOptions opts;
    opts.jobs = jobs;
    opts.budget = budget;
    opts.sample = sample;
    opts.seed = seed;
    const gpk::SurveyResult res = gpk::run_survey(*scope, n, opts);
    const std::string doc = gpk::format_survey(res);
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitInput;
        }
        out << doc;
        std::cerr << "examined " << res.pairs_examined << " pairs, " << res.findings.size()
                  << " non-packing; report written to " << out_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph packing toolkit: condition reports, solvers, generators, surveys"};
    app.require_subcommand(1);

    std::string gfile, hfile, format = "kv", mode = "incremental", family, out_path,
                scope_name = "theorem5";
    std::vector<int> gen_params;
    bool graph6 = false, verify = false, reverse = false;
    long long budget = 100'000'000;
    int survey_n = 0, jobs = 1;
    std::optional<long long> sample;
    uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check", "evaluate packing conditions for two graphs");
    check->add_option("gfile", gfile, "edge-list file for G")->required();
    check->add_option("hfile", hfile, "edge-list file for H")->required();
    check->add_flag("--graph6", graph6, "read inputs as graph6");
    check->add_option("--format", format, "kv or text")
        ->check(CLI::IsMember({"kv", "text"}));

    CLI::App* pack = app.add_subcommand("pack", "find an edge-disjoint placement of G and H");
    pack->add_option("gfile", gfile, "edge-list file for G")->required();
    pack->add_option("hfile", hfile, "edge-list file for H")->required();
    pack->add_option("--mode", mode, "incremental or exact")
        ->check(CLI::IsMember({"incremental", "exact"}));
    pack->add_option("--budget", budget, "exact-search node limit");
    pack->add_flag("--verify", verify, "re-check the witness before printing");
    pack->add_flag("--reverse", reverse, "swap the roles of the two inputs");
    pack->add_flag("--graph6", graph6, "read inputs as graph6");

    CLI::App* gen = app.add_subcommand("gen", "generate a named family graph");
    gen->add_option("family", family, "matching | star | cbip | clique")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* survey = app.add_subcommand("survey", "enumerate small instances and report "
                                                    "non-packing pairs");
    survey->add_option("n", survey_n, "vertex count")->required();
    survey->add_option("--scope", scope_name, "theorem5 | question1 | question2")->required();
    survey->add_option("--out", out_path, "findings file (default stdout)");
    survey->add_option("--jobs", jobs, "worker threads");
    survey->add_option("--budget", budget, "per-pair exact-search node limit");
    survey->add_option("--sample", sample, "sample this many pairs instead of enumerating");
    survey->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(gfile, hfile, graph6, format);
        if (app.got_subcommand(pack))
            return cmd_pack(gfile, hfile, mode, budget, verify, reverse, graph6);
        if (app.got_subcommand(gen)) return cmd_gen(family, gen_params, out_path);
        if (app.got_subcommand(survey))
            return cmd_survey(survey_n, scope_name, out_path, jobs, budget, sample, seed);
    } catch (const gpk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
