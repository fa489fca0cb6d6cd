// busfactor: estimate bus-factors of bipartite people-task graphs.
//
// Subcommands:
//   generate   write a synthetic power-law graph as an edge-list file
//   estimate   score a graph file under one or both measures
//   study      run the accuracy / timing / sensitivity experiments
//
// Machine-readable CSV goes to stdout; human summaries go to stderr.
// Exit codes: 0 success, 2 usage or input error, 3 oracle-guard refusal.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "busfactor/edge_list.hpp"
#include "busfactor/errors.hpp"
#include "busfactor/experiments.hpp"
#include "busfactor/generator.hpp"
#include "busfactor/heuristics.hpp"
#include "busfactor/measures.hpp"

namespace {

using namespace busfactor;

struct EstimateConfig {
    std::string input;
    std::string measure = "both";
    std::string heuristic = "combined";
    double avelino_t = 0.5;
    std::size_t tau_threshold = 10;
    std::optional<double> tau_frac;
    std::string curve_out;
    bool exact = false;
};

std::size_t effective_tau_threshold(const EstimateConfig& cfg, const BipartiteGraph& g) {
    if (cfg.tau_frac) {
        return static_cast<std::size_t>(*cfg.tau_frac * static_cast<double>(g.num_tasks()));
    }
    return std::min(cfg.tau_threshold, g.num_tasks());
}

RemovalOrder order_for(const BipartiteGraph& g, const std::string& heuristic,
                       Measure measure, std::size_t tau_threshold) {
    if (heuristic == "min_cov") {
        return measure == Measure::Piccolo
                   ? mixed_order(g, BaseHeuristic::MinCoverage, tau_threshold)
                   : minimum_coverage_order(g);
    }
    if (heuristic == "max_cov") {
        return measure == Measure::Piccolo
                   ? mixed_order(g, BaseHeuristic::MaxCoverage, tau_threshold)
                   : maximum_coverage_order(g);
    }
    if (heuristic == "degree") return degree_order(g);
    if (heuristic == "greedy_i") return greedy_isolation_order(g);
    if (heuristic == "greedy_tau") return greedy_tau_order(g, g.num_tasks());
    throw DomainError("unknown heuristic '" + heuristic + "'");
}

int run_estimate(const EstimateConfig& cfg) {
    const BipartiteGraph g = read_edge_list_file(cfg.input);
    const bool do_avelino = cfg.measure == "avelino" || cfg.measure == "both";
    const bool do_piccolo = cfg.measure == "piccolo" || cfg.measure == "both";
    const std::size_t threshold = effective_tau_threshold(cfg, g);

    if (!cfg.curve_out.empty() && cfg.measure == "both") {
        throw DomainError("--curve-out needs a single --measure");
    }

    auto emit = [](const std::string& measure, const std::string& heuristic,
                   double score) {
        std::cout << measure << ',' << heuristic << ',' << score << "\n";
    };

    std::optional<RemovalOrder> curve_order;
    for (Measure m : {Measure::Avelino, Measure::Piccolo}) {
        if ((m == Measure::Avelino && !do_avelino) ||
            (m == Measure::Piccolo && !do_piccolo)) {
            continue;
        }
        const std::string mname = m == Measure::Avelino ? "avelino" : "piccolo";
        if (cfg.exact) {
            const double score = m == Measure::Avelino
                                     ? static_cast<double>(exact_avelino(g, cfg.avelino_t))
                                     : exact_piccolo(g);
            emit(mname, "exact", score);
            continue;
        }
        RemovalOrder order;
        double score;
        if (cfg.heuristic == "combined") {
            auto result = combined_estimate(g, m, {cfg.avelino_t, threshold});
            order = std::move(result.order);
            score = result.value;
        } else {
            order = order_for(g, cfg.heuristic, m, threshold);
            score = m == Measure::Avelino
                        ? static_cast<double>(estimate_avelino(g, order, cfg.avelino_t))
                        : estimate_piccolo(g, order);
        }
        emit(mname, cfg.heuristic, score);
        curve_order = std::move(order);
    }

    if (!cfg.curve_out.empty()) {
        if (!curve_order) {
            throw DomainError("--curve-out requires a heuristic run, not --exact");
        }
        std::ofstream out(cfg.curve_out);
        if (!out) throw DomainError("cannot open '" + cfg.curve_out + "' for writing");
        const auto curve = cfg.measure == "avelino" ? coverage_curve(g, *curve_order)
                                                    : tau_curve(g, *curve_order);
        write_curve_csv(curve, out);
    }
    return 0;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open '" + path.string() + "' for writing");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bus-factor estimation for bipartite people-task graphs"};
    app.require_subcommand(1);

    // generate
    GeneratorParams gen_params;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Generate a power-law bipartite graph");
    generate->add_option("--people", gen_params.n_people, "Number of people")->required();
    generate->add_option("--tasks", gen_params.n_tasks, "Number of tasks")->required();
    generate->add_option("--lambda-p", gen_params.lambda_p, "Person-side skew, in (0,1)");
    generate->add_option("--lambda-t", gen_params.lambda_t, "Task-side skew, in (0,1)");
    generate->add_option("--kp", gen_params.k_p, "Maximum person degree");
    generate->add_option("--kt", gen_params.k_t, "Maximum task degree");
    generate->add_option("--seed", gen_params.seed, "PRNG seed");
    generate->add_option("--out", gen_out, "Output edge-list path")->required();

    // estimate
    EstimateConfig est;
    auto* estimate = app.add_subcommand("estimate", "Estimate the bus-factor of a graph file");
    estimate->add_option("--input", est.input, "Edge-list file")->required();
    estimate->add_option("--measure", est.measure, "avelino | piccolo | both")
        ->check(CLI::IsMember({"avelino", "piccolo", "both"}));
    estimate->add_option("--heuristic", est.heuristic,
                         "min_cov | max_cov | degree | greedy_i | greedy_tau | combined")
        ->check(CLI::IsMember({"min_cov", "max_cov", "degree", "greedy_i",
                               "greedy_tau", "combined"}));
    estimate->add_option("--t", est.avelino_t, "Coverage threshold for the avelino measure");
    auto* tau_abs = estimate->add_option("--tau-threshold", est.tau_threshold,
                                         "Absolute tau threshold for mixed orders");
    auto* tau_frac = estimate->add_option("--tau-frac", est.tau_frac,
                                          "Relative tau threshold (fraction of |T|)");
    tau_abs->excludes(tau_frac);
    estimate->add_option("--curve-out", est.curve_out, "Write the decay curve CSV here");
    estimate->add_flag("--exact", est.exact, "Exact oracle (small graphs only)");

    // study
    auto* study = app.add_subcommand("study", "Run an experiment study");
    study->require_subcommand(1);
    std::size_t acc_graphs = 100;
    std::uint64_t study_seed = 0;
    std::string study_out = ".";
    std::size_t jobs = 1;
    bool paper_scale = false;
    auto* accuracy = study->add_subcommand("accuracy", "Gap-ratio accuracy study");
    accuracy->add_option("--graphs", acc_graphs, "Number of graphs");
    accuracy->add_option("--seed", study_seed, "Base seed");
    accuracy->add_option("--out", study_out, "Output directory")->required();
    accuracy->add_option("--jobs", jobs, "Parallel workers");
    accuracy->add_flag("--paper-scale", paper_scale,
                       "Use the full-scale parameter ranges");

    std::vector<std::size_t> timing_sizes;
    int timing_repeats = 3;
    auto* timing = study->add_subcommand("timing", "Runtime scaling study");
    timing->add_option("--sizes", timing_sizes, "Node counts N (|P|=|T|=N)")
        ->required()
        ->delimiter(',');
    timing->add_option("--seed", study_seed, "Base seed");
    timing->add_option("--repeats", timing_repeats, "Runs per cell (minimum is kept)");
    timing->add_option("--out", study_out, "Output directory")->required();

    std::string reports_path;
    auto* sensitivity = study->add_subcommand("sensitivity", "Structural correlation study");
    sensitivity->add_option("--reports", reports_path, "Per-graph CSV from the accuracy study")
        ->required();
    sensitivity->add_option("--out", study_out, "Output directory")->required();

    try {
        app.parse(argc, argv);

        if (*generate) {
            const BipartiteGraph g = generate_power_law_bipartite(gen_params);
            write_edge_list_file(g, gen_out);
            std::size_t max_p = 0, max_t = 0;
            for (std::size_t i = 0; i < g.num_people(); ++i)
                max_p = std::max(max_p, g.person_degree(static_cast<int>(i)));
            for (std::size_t j = 0; j < g.num_tasks(); ++j)
                max_t = std::max(max_t, g.task_degree(static_cast<int>(j)));
            std::cout << "people," << g.num_people() << ",tasks," << g.num_tasks()
                      << ",edges," << g.num_edges() << ",max_person_degree," << max_p
                      << ",max_task_degree," << max_t << "\n";
            return 0;
        }
        if (*estimate) {
            return run_estimate(est);
        }
        if (*accuracy) {
            const auto ranges = paper_scale ? paper_scale_ranges() : ParamRanges{};
            const auto result = run_accuracy_study(acc_graphs, ranges, study_seed, jobs);
            std::filesystem::create_directories(study_out);
            std::ostringstream per_graph, summary;
            write_per_graph_csv(result.reports, per_graph);
            write_summary_csv(result.summary, summary);
            write_file(std::filesystem::path(study_out) / "per_graph.csv", per_graph.str());
            write_file(std::filesystem::path(study_out) / "summary.csv", summary.str());
            std::cout << summary.str();
            std::cerr << "accuracy study: " << result.reports.size() << " graphs, "
                      << result.resampled << " parameter redraws\n";
            return 0;
        }
        if (*timing) {
            const auto rows = run_timing_study(timing_sizes, study_seed, timing_repeats);
            std::filesystem::create_directories(study_out);
            std::ostringstream csv;
            write_timing_csv(rows, csv);
            write_file(std::filesystem::path(study_out) / "timings.csv", csv.str());
            std::cout << csv.str();
            return 0;
        }
        if (*sensitivity) {
            std::ifstream in(reports_path);
            if (!in) throw DomainError("cannot open '" + reports_path + "'");
            const auto reports = read_per_graph_csv(in);
            const auto table = run_sensitivity_study(reports);
            std::filesystem::create_directories(study_out);
            std::ostringstream csv;
            write_correlation_csv(table, csv);
            write_file(std::filesystem::path(study_out) / "correlations.csv", csv.str());
            std::cout << csv.str();
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
