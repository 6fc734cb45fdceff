// factorlab: exact binding numbers, fractional [a,b]-coveredness, fractional
// ID-[a,b]-factor-critical covered checks, and counterexample campaigns on
// small graphs.
//
// Exit codes: 0 computed / property holds, 1 property does not hold,
// 2 campaign found a counterexample, 3 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factorlab/binding.hpp"
#include "factorlab/campaign.hpp"
#include "factorlab/fractional.hpp"
#include "factorlab/generators.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/id_critical.hpp"
#include "factorlab/theorems.hpp"

namespace fl = factorlab;

namespace {

// A <graph> / <corpus> argument is a file path if it names a file, otherwise
// it is taken as a graph6 literal. Files holding edge lists start with a
// digit; everything else is one graph6 string per line.
std::vector<fl::Graph> load_graphs(const std::string& arg) {
    std::ifstream file(arg);
    if (!file) return {fl::parse_graph6(arg)};
    std::string content((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
    size_t pos = content.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw fl::parse_error("empty input file: " + arg);
    if (std::isdigit((unsigned char)content[pos])) return {fl::parse_edge_list(content)};
    std::istringstream in(content);
    return fl::read_graph6_stream(in);
}

fl::Graph load_single_graph(const std::string& arg) {
    auto graphs = load_graphs(arg);
    if (graphs.size() != 1)
        throw fl::parse_error("expected exactly one graph, got " +
                              std::to_string(graphs.size()));
    return graphs[0];
}

int default_jobs() {
    if (const char* env = std::getenv("FACTORLAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct CampaignCli {
    std::string corpus;
    int a = 2, b = 2;
    std::string slack = "1/10";
    std::string format = "text";
    std::string output;
    std::string threshold_override;
    bool always_check = false;
    int jobs = default_jobs();

    void attach(CLI::App* cmd) {
        cmd->add_option("corpus", corpus, "graph6 corpus file (one graph per line)")
            ->required();
        cmd->add_option("-a", a, "lower degree bound")->required();
        cmd->add_option("-b", b, "upper degree bound")->required();
        cmd->add_option("--slack", slack, "sharpness window above the threshold (p/q)");
        cmd->add_option("--format", format, "report format: text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("-o,--output", output, "report file (default stdout)");
        cmd->add_option("--threshold-override", threshold_override,
                        "replace the binding threshold with a fixed rational (testing hook)");
        cmd->add_flag("--always-check", always_check,
                      "evaluate the conclusion even when the hypothesis fails");
        cmd->add_option("--jobs", jobs, "worker threads (env FACTORLAB_JOBS)");
    }

    int run(fl::CampaignMode mode) {
        fl::CampaignConfig config;
        config.bounds = fl::FactorBounds(a, b);
        config.mode = mode;
        config.slack = fl::Rational::parse(slack);
        config.always_check = always_check;
        config.jobs = jobs;
        if (!threshold_override.empty())
            config.threshold_override = fl::Rational::parse(threshold_override);

        std::vector<fl::Graph> graphs = load_graphs(corpus);
        fl::CampaignReport report =
            fl::run_campaign(graphs, config, fl::to_string(mode) + " on " + corpus);

        std::ostringstream body;
        if (format == "json")
            fl::write_json(report, body);
        else if (format == "csv")
            fl::write_csv(report, body);
        else
            fl::write_text_summary(report, body);
        write_output(output, body.str());
        if (!output.empty() && output != "-")
            fl::write_text_summary(report, std::cerr);
        return report.counterexamples.empty() ? 0 : 2;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional [a,b]-factor laboratory"};
    app.require_subcommand(1);

    // bind
    std::string bind_graph;
    bool bind_cross_check = false;
    auto* bind_cmd = app.add_subcommand("bind", "exact binding number with witness");
    bind_cmd->add_option("graph", bind_graph, "graph file or graph6 literal")->required();
    bind_cmd->add_flag("--cross-check", bind_cross_check,
                       "also run the pruned scan and require agreement");

    // covered
    std::string cov_graph;
    int cov_a = 1, cov_b = 1, cov_cap = 20;
    bool cov_oracle = false;
    auto* cov_cmd = app.add_subcommand("covered", "fractional [a,b]-covered verdict");
    cov_cmd->add_option("graph", cov_graph)->required();
    cov_cmd->add_option("-a", cov_a)->required();
    cov_cmd->add_option("-b", cov_b)->required();
    cov_cmd->add_flag("--oracle", cov_oracle, "use the half-integral oracle instead");
    cov_cmd->add_option("--cap", cov_cap, "free-edge cap for the oracle");

    // factor
    std::string fac_graph;
    int fac_a = 1, fac_b = 1, fac_cap = 20;
    std::vector<int> fac_forced;
    auto* fac_cmd = app.add_subcommand("factor", "fractional [a,b]-factor feasibility");
    fac_cmd->add_option("graph", fac_graph)->required();
    fac_cmd->add_option("-a", fac_a)->required();
    fac_cmd->add_option("-b", fac_b)->required();
    fac_cmd->add_option("--force-edge", fac_forced,
                        "pin edge u v to weight 1 (repeatable, two ints per use)")
        ->expected(-2);
    fac_cmd->add_option("--cap", fac_cap, "free-edge cap");

    // idcc
    std::string id_graph;
    int id_a = 1, id_b = 1;
    bool id_no_empty = false, id_profile = false;
    auto* id_cmd = app.add_subcommand("idcc", "fractional ID-[a,b]-factor-critical covered");
    id_cmd->add_option("graph", id_graph)->required();
    id_cmd->add_option("-a", id_a)->required();
    id_cmd->add_option("-b", id_b)->required();
    id_cmd->add_flag("--no-empty-I", id_no_empty,
                     "exclude I = {} (alternative reading of the definition)");
    id_cmd->add_flag("--profile", id_profile, "pass/fail counts grouped by |I|");

    // campaigns
    CampaignCli thm2, conj1;
    auto* thm2_cmd = app.add_subcommand("verify-theorem2",
                                        "binding-condition campaign, strict inequality");
    thm2.attach(thm2_cmd);
    auto* conj1_cmd = app.add_subcommand("scan-conjecture1",
                                         "binding-condition campaign, non-strict inequality");
    conj1.attach(conj1_cmd);

    // gen
    std::string gen_family, gen_output;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    int gen_count = 1;
    auto* gen_cmd = app.add_subcommand("gen", "emit graph6 for a graph family");
    gen_cmd->add_option("family", gen_family,
                        "complete|cycle|path|complete-bipartite|multipartite|"
                        "join-complete-empty|gnp")
        ->required();
    gen_cmd->add_option("params", gen_params, "family parameters");
    gen_cmd->add_option("--seed", gen_seed, "base seed for gnp");
    gen_cmd->add_option("--count", gen_count, "number of graphs (gnp: seeds seed..seed+count-1)");
    gen_cmd->add_option("-o,--output", gen_output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bind_cmd->parsed()) {
            fl::Graph g = load_single_graph(bind_graph);
            fl::BindingWitness w = fl::binding_number(g);
            if (bind_cross_check) {
                fl::BindingWitness p = fl::binding_number_pruned(g);
                if (p.value != w.value || !(p.witness == w.witness)) {
                    std::cerr << "error: binding implementations disagree\n";
                    return 3;
                }
            }
            std::cout << "bind = " << w.value.str() << "\nwitness X = " << w.witness.str()
                      << "\n|N(X)| = " << fl::neighborhood(g, w.witness).count()
                      << ", |X| = " << w.witness.count() << "\n";
            return 0;
        }

        if (cov_cmd->parsed()) {
            fl::Graph g = load_single_graph(cov_graph);
            fl::FactorBounds bounds(cov_a, cov_b);
            if (cov_oracle) {
                fl::OracleVerdict v = fl::covered_oracle(g, bounds, cov_cap);
                if (v.covered) {
                    std::cout << "covered (oracle)\n";
                    return 0;
                }
                std::cout << "not covered (oracle)\nfailing edge: " << v.failing_edge->first
                          << " " << v.failing_edge->second << "\n";
                return 1;
            }
            fl::CoveredVerdict v = fl::is_fractional_ab_covered(g, bounds);
            if (v.covered) {
                std::cout << "covered\n";
                return 0;
            }
            std::cout << "not covered\nS = " << v.witness->s.str()
                      << "\nT = " << v.witness->t.str()
                      << "\nepsilon = " << v.witness->epsilon
                      << ", delta = " << v.witness->delta << "\n";
            return 1;
        }

        if (fac_cmd->parsed()) {
            fl::Graph g = load_single_graph(fac_graph);
            fl::FactorBounds bounds(fac_a, fac_b);
            std::vector<int> forced;
            if (fac_forced.size() % 2 != 0)
                throw std::invalid_argument("--force-edge takes vertex pairs");
            for (size_t i = 0; i + 1 < fac_forced.size(); i += 2) {
                int e = g.edge_index(fac_forced[i], fac_forced[i + 1]);
                if (e < 0)
                    throw std::invalid_argument("--force-edge: no such edge " +
                                                std::to_string(fac_forced[i]) + " " +
                                                std::to_string(fac_forced[i + 1]));
                forced.push_back(e);
            }
            auto h = fl::fractional_factor_exists(g, bounds, forced, fac_cap);
            if (!h) {
                std::cout << "no fractional [" << fac_a << "," << fac_b << "]-factor\n";
                return 1;
            }
            std::cout << "feasible\n";
            for (size_t i = 0; i < h->weights.size(); ++i)
                std::cout << "h(" << g.edges()[i].first << "," << g.edges()[i].second
                          << ") = " << h->weights[i].str() << "\n";
            return 0;
        }

        if (id_cmd->parsed()) {
            fl::Graph g = load_single_graph(id_graph);
            fl::FactorBounds bounds(id_a, id_b);
            if (id_profile) {
                fl::IdCriticalProfile p = fl::id_critical_profile(g, bounds);
                for (auto& [size, pf] : p.by_size)
                    std::cout << "|I| = " << size << ": " << pf.first << " pass, "
                              << pf.second << " fail\n";
                return p.total_failures() == 0 ? 0 : 1;
            }
            fl::IdCriticalVerdict v = fl::is_id_critical_covered(g, bounds, !id_no_empty);
            if (v.holds) {
                std::cout << "fractional ID-[" << id_a << "," << id_b
                          << "]-factor-critical covered\n";
                return 0;
            }
            std::cout << "property fails\nfailing independent set I = "
                      << v.failing_set->str() << "\ninner witness for G-I: S = "
                      << v.inner->witness->s.str() << ", T = " << v.inner->witness->t.str()
                      << ", epsilon = " << v.inner->witness->epsilon
                      << ", delta = " << v.inner->witness->delta << "\n";
            return 1;
        }

        if (thm2_cmd->parsed()) return thm2.run(fl::CampaignMode::Theorem2);
        if (conj1_cmd->parsed()) return conj1.run(fl::CampaignMode::Conjecture1);

        if (gen_cmd->parsed()) {
            auto ip = [&](size_t i) {
                if (i >= gen_params.size())
                    throw std::invalid_argument("gen: missing parameter for " + gen_family);
                return std::stoi(gen_params[i]);
            };
            std::vector<fl::Graph> out;
            if (gen_family == "complete") {
                out.push_back(fl::complete(ip(0)));
            } else if (gen_family == "cycle") {
                out.push_back(fl::cycle(ip(0)));
            } else if (gen_family == "path") {
                out.push_back(fl::path(ip(0)));
            } else if (gen_family == "complete-bipartite") {
                out.push_back(fl::complete_bipartite(ip(0), ip(1)));
            } else if (gen_family == "multipartite") {
                std::vector<int> parts;
                for (size_t i = 0; i < gen_params.size(); ++i) parts.push_back(ip(i));
                out.push_back(fl::complete_multipartite(parts));
            } else if (gen_family == "join-complete-empty") {
                // K_p joined with q isolated vertices
                out.push_back(fl::join(fl::complete(ip(0)),
                                       fl::Graph::from_edge_list(ip(1), {})));
            } else if (gen_family == "gnp") {
                int n = ip(0);
                fl::Rational p = fl::Rational::parse(gen_params.at(1));
                for (int i = 0; i < gen_count; ++i)
                    out.push_back(fl::random_gnp(n, p, gen_seed + (std::uint64_t)i));
            } else {
                throw std::invalid_argument("gen: unknown family '" + gen_family + "'");
            }
            std::string body;
            for (const fl::Graph& g : out) body += fl::emit_graph6(g) + "\n";
            write_output(gen_output, body);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
