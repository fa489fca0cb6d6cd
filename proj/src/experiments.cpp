#include "busfactor/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "busfactor/errors.hpp"
#include "busfactor/heuristics.hpp"
#include "busfactor/measures.hpp"
#include "busfactor/stats.hpp"

namespace busfactor {

namespace {

constexpr double kTieEps = 1e-12;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct TimedOrder {
    RemovalOrder order;
    double seconds = 0.0;
};

template <typename F>
TimedOrder timed(F&& f) {
    const double t0 = now_seconds();
    RemovalOrder order = f();
    return {std::move(order), now_seconds() - t0};
}

GeneratorParams draw_params(const ParamRanges& r, Rng& rng) {
    GeneratorParams p;
    p.n_people = r.n_people.first +
                 uniform_index(rng, r.n_people.second - r.n_people.first + 1);
    p.n_tasks = r.n_tasks.first +
                uniform_index(rng, r.n_tasks.second - r.n_tasks.first + 1);
    p.lambda_p = r.lambda.first + uniform01(rng) * (r.lambda.second - r.lambda.first);
    p.lambda_t = r.lambda.first + uniform01(rng) * (r.lambda.second - r.lambda.first);
    p.k_p = r.k.first + static_cast<int>(uniform_index(
                            rng, static_cast<std::size_t>(r.k.second - r.k.first + 1)));
    p.k_t = r.k.first + static_cast<int>(uniform_index(
                            rng, static_cast<std::size_t>(r.k.second - r.k.first + 1)));
    p.seed = rng();
    return p;
}

// Evaluates the full heuristic set on one generated graph. Timings wrap the
// order construction only; combined is charged for both of its members.
HeuristicReport evaluate_graph(std::size_t graph_id, const GeneratorParams& params,
                               const BipartiteGraph& g, double avelino_t,
                               std::size_t tau_threshold) {
    HeuristicReport report;
    report.graph_id = graph_id;
    report.params = params;
    report.features = g.structural_features();
    report.features.lambda_p = params.lambda_p;
    report.features.lambda_t = params.lambda_t;
    report.features.k_p = params.k_p;
    report.features.k_t = params.k_t;

    const std::size_t threshold = std::min(tau_threshold, g.num_tasks());

    auto min_cov = timed([&] { return minimum_coverage_order(g); });
    auto max_cov = timed([&] { return maximum_coverage_order(g); });
    auto greedy_i = timed([&] { return greedy_isolation_order(g); });
    auto degree = timed([&] { return degree_order(g); });
    auto min_cov_tau = timed([&] { return mixed_order(g, BaseHeuristic::MinCoverage, threshold); });
    auto max_cov_tau = timed([&] { return mixed_order(g, BaseHeuristic::MaxCoverage, threshold); });
    auto greedy_tau = timed([&] { return greedy_tau_order(g, g.num_tasks()); });

    auto add = [&report](const std::string& heuristic, const std::string& measure,
                         double score, double seconds) {
        report.results.push_back({heuristic, measure, score, seconds, 1.0, false});
    };

    auto a_of = [&](const RemovalOrder& o) {
        return static_cast<double>(estimate_avelino(g, o, avelino_t));
    };
    const double a_min = a_of(min_cov.order);
    const double a_max = a_of(max_cov.order);
    add("min_cov", "avelino", a_min, min_cov.seconds);
    add("max_cov", "avelino", a_max, max_cov.seconds);
    add("greedy_i", "avelino", a_of(greedy_i.order), greedy_i.seconds);
    add("degree", "avelino", a_of(degree.order), degree.seconds);
    add("combined", "avelino", std::min(a_min, a_max), min_cov.seconds + max_cov.seconds);

    const double p_min = estimate_piccolo(g, min_cov_tau.order);
    const double p_max = estimate_piccolo(g, max_cov_tau.order);
    add("min_cov_tau", "piccolo", p_min, min_cov_tau.seconds);
    add("max_cov_tau", "piccolo", p_max, max_cov_tau.seconds);
    add("greedy_tau", "piccolo", estimate_piccolo(g, greedy_tau.order), greedy_tau.seconds);
    add("degree", "piccolo", estimate_piccolo(g, degree.order), degree.seconds);
    add("combined", "piccolo", std::min(p_min, p_max),
        min_cov_tau.seconds + max_cov_tau.seconds);

    // Gap ratios against the per-measure best score.
    for (const char* measure : {"avelino", "piccolo"}) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& res : report.results) {
            if (res.measure == measure) best = std::min(best, res.score);
        }
        for (auto& res : report.results) {
            if (res.measure != measure) continue;
            res.gap_ratio = res.score / best;
            res.best = res.score <= best * (1.0 + kTieEps);
        }
    }
    return report;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

}  // namespace

ParamRanges paper_scale_ranges() {
    ParamRanges r;
    r.n_people = {1000, 2000};
    r.n_tasks = {1000, 2000};
    r.lambda = {0.3, 0.7};
    r.k = {50, 300};
    return r;
}

AccuracyStudy run_accuracy_study(std::size_t k_graphs, const ParamRanges& ranges,
                                 std::uint64_t seed, std::size_t jobs,
                                 double avelino_t, std::size_t tau_threshold) {
    AccuracyStudy study;
    study.reports.resize(k_graphs);
    std::vector<std::size_t> resampled_per_graph(k_graphs, 0);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Rng rng(seed + i);
            constexpr int kMaxDraws = 20;
            for (int attempt = 0;; ++attempt) {
                GeneratorParams params = draw_params(ranges, rng);
                try {
                    BipartiteGraph g = generate_power_law_bipartite(params);
                    study.reports[i] =
                        evaluate_graph(i, params, g, avelino_t, tau_threshold);
                    break;
                } catch (const GenerationError&) {
                    if (attempt + 1 >= kMaxDraws) throw;
                    ++resampled_per_graph[i];
                }
            }
        }
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, k_graphs ? k_graphs : 1));
    if (jobs == 1) {
        worker(0, k_graphs);
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (k_graphs + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::size_t begin = j * chunk;
            const std::size_t end = std::min(k_graphs, begin + chunk);
            if (begin < end) threads.emplace_back(worker, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    for (std::size_t c : resampled_per_graph) study.resampled += c;
    study.summary = summarize(study.reports);
    return study;
}

std::vector<AccuracySummaryRow> summarize(const std::vector<HeuristicReport>& reports) {
    // Keyed by (measure, heuristic), in first-seen order.
    std::vector<AccuracySummaryRow> rows;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    std::vector<std::size_t> counts, firsts;
    for (const auto& report : reports) {
        for (const auto& res : report.results) {
            auto key = std::make_pair(res.measure, res.heuristic);
            auto it = index.find(key);
            if (it == index.end()) {
                it = index.emplace(key, rows.size()).first;
                rows.push_back({res.measure, res.heuristic, 0.0, 0.0,
                                std::numeric_limits<double>::infinity(), 0.0});
                counts.push_back(0);
                firsts.push_back(0);
            }
            auto& row = rows[it->second];
            row.gap_avg += res.gap_ratio;
            row.gap_min = std::min(row.gap_min, res.gap_ratio);
            row.gap_max = std::max(row.gap_max, res.gap_ratio);
            ++counts[it->second];
            if (res.best) ++firsts[it->second];
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (counts[i] > 0) {
            rows[i].gap_avg /= static_cast<double>(counts[i]);
            rows[i].pct_first =
                100.0 * static_cast<double>(firsts[i]) / static_cast<double>(counts[i]);
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.measure < b.measure; });
    return rows;
}

std::vector<TimingRow> run_timing_study(const std::vector<std::size_t>& sizes,
                                        std::uint64_t seed, int repeats) {
    std::vector<TimingRow> rows;
    for (std::size_t n : sizes) {
        Rng rng(seed + n);
        const double p = std::log(5.0 * static_cast<double>(n)) / static_cast<double>(n);
        BipartiteGraph g = generate_random_bipartite(n, std::min(p, 1.0), rng);
        const std::size_t edges = g.num_edges();
        const std::size_t threshold = std::min<std::size_t>(10, g.num_tasks());

        struct Cell {
            const char* name;
            std::function<RemovalOrder()> run;
        };
        const Cell cells[] = {
            {"min_cov", [&] { return minimum_coverage_order(g); }},
            {"max_cov", [&] { return maximum_coverage_order(g); }},
            {"min_cov_tau", [&] { return mixed_order(g, BaseHeuristic::MinCoverage, threshold); }},
            {"max_cov_tau", [&] { return mixed_order(g, BaseHeuristic::MaxCoverage, threshold); }},
        };
        for (const auto& cell : cells) {
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < std::max(1, repeats); ++r) {
                const double t0 = now_seconds();
                auto order = cell.run();
                const double dt = now_seconds() - t0;
                if (order.people.size() != g.num_people()) {
                    throw DomainError("timing study heuristic returned a partial order");
                }
                best = std::min(best, dt);
            }
            rows.push_back({n, edges, cell.name, best});
        }
    }
    return rows;
}

CorrelationTable run_sensitivity_study(const std::vector<HeuristicReport>& reports) {
    if (reports.size() < 30) {
        throw DomainError("sensitivity study needs at least 30 reports");
    }
    CorrelationTable table;
    table.feature_names = {"n_people",  "n_tasks",       "lambda_p",    "lambda_t",
                           "k_p",       "k_t",           "density",     "assortativity",
                           "leaf_people", "leaf_tasks"};

    std::vector<std::pair<std::string, std::string>> columns;
    for (const auto& res : reports.front().results) {
        columns.emplace_back(res.heuristic, res.measure);
        table.columns.push_back(res.heuristic + ":" + res.measure);
    }

    auto feature_value = [](const HeuristicReport& r,
                            std::size_t f) -> std::optional<double> {
        const auto& x = r.features;
        switch (f) {
            case 0: return static_cast<double>(x.n_people);
            case 1: return static_cast<double>(x.n_tasks);
            case 2: return x.lambda_p;
            case 3: return x.lambda_t;
            case 4: return x.k_p ? std::optional<double>(*x.k_p) : std::nullopt;
            case 5: return x.k_t ? std::optional<double>(*x.k_t) : std::nullopt;
            case 6: return x.density;
            case 7:
                return x.assortativity_defined ? std::optional<double>(x.assortativity)
                                               : std::nullopt;
            case 8: return static_cast<double>(x.leaf_people);
            case 9: return static_cast<double>(x.leaf_tasks);
        }
        return std::nullopt;
    };

    table.cells.assign(table.feature_names.size(), {});
    for (std::size_t f = 0; f < table.feature_names.size(); ++f) {
        for (const auto& [heuristic, measure] : columns) {
            std::vector<double> xs, ys;
            for (const auto& report : reports) {
                auto x = feature_value(report, f);
                if (!x) continue;  // undefined feature for this graph
                for (const auto& res : report.results) {
                    if (res.heuristic == heuristic && res.measure == measure) {
                        xs.push_back(*x);
                        ys.push_back(res.gap_ratio);
                        break;
                    }
                }
            }
            if (xs.size() < 2) {
                table.cells[f].push_back(std::nullopt);
            } else {
                table.cells[f].push_back(pearson(xs, ys));
            }
        }
    }
    return table;
}

void write_per_graph_csv(const std::vector<HeuristicReport>& reports,
                         std::ostream& out) {
    out << "graph_id,heuristic,measure,score,gap_ratio,seconds,"
           "n_people,n_tasks,lambda_p,lambda_t,k_p,k_t,density,assortativity,"
           "leaf_people,leaf_tasks\n";
    for (const auto& report : reports) {
        const auto& x = report.features;
        for (const auto& res : report.results) {
            out << report.graph_id << ',' << res.heuristic << ',' << res.measure << ','
                << res.score << ',' << res.gap_ratio << ',' << res.seconds << ','
                << x.n_people << ',' << x.n_tasks << ','
                << (x.lambda_p ? std::to_string(*x.lambda_p) : "NA") << ','
                << (x.lambda_t ? std::to_string(*x.lambda_t) : "NA") << ','
                << (x.k_p ? std::to_string(*x.k_p) : "NA") << ','
                << (x.k_t ? std::to_string(*x.k_t) : "NA") << ',' << x.density << ','
                << (x.assortativity_defined ? std::to_string(x.assortativity) : "NA")
                << ',' << x.leaf_people << ',' << x.leaf_tasks << "\n";
        }
    }
}

std::vector<HeuristicReport> read_per_graph_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(1, "empty per-graph CSV");
    }
    std::map<std::size_t, HeuristicReport> by_id;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 16) {
            throw ParseError(lineno, "expected 16 fields");
        }
        const std::size_t id = std::stoull(f[0]);
        auto& report = by_id[id];
        report.graph_id = id;
        report.results.push_back(
            {f[1], f[2], std::stod(f[3]), std::stod(f[5]), std::stod(f[4]), false});
        auto& res = report.results.back();
        res.best = res.gap_ratio <= 1.0 + kTieEps;
        auto& x = report.features;
        x.n_people = std::stoull(f[6]);
        x.n_tasks = std::stoull(f[7]);
        if (f[8] != "NA") x.lambda_p = std::stod(f[8]);
        if (f[9] != "NA") x.lambda_t = std::stod(f[9]);
        if (f[10] != "NA") x.k_p = std::stoi(f[10]);
        if (f[11] != "NA") x.k_t = std::stoi(f[11]);
        x.density = std::stod(f[12]);
        if (f[13] != "NA") {
            x.assortativity = std::stod(f[13]);
            x.assortativity_defined = true;
        }
        x.leaf_people = std::stoull(f[14]);
        x.leaf_tasks = std::stoull(f[15]);
    }
    std::vector<HeuristicReport> reports;
    reports.reserve(by_id.size());
    for (auto& [id, report] : by_id) reports.push_back(std::move(report));
    return reports;
}

void write_summary_csv(const std::vector<AccuracySummaryRow>& rows, std::ostream& out) {
    out << "measure,heuristic,pct_first,gap_avg,gap_min,gap_max\n";
    for (const auto& row : rows) {
        out << row.measure << ',' << row.heuristic << ',' << row.pct_first << ','
            << row.gap_avg << ',' << row.gap_min << ',' << row.gap_max << "\n";
    }
}

void write_timing_csv(const std::vector<TimingRow>& rows, std::ostream& out) {
    out << "n,edges,heuristic,seconds\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.edges << ',' << row.heuristic << ','
            << row.seconds << "\n";
    }
}

void write_correlation_csv(const CorrelationTable& table, std::ostream& out) {
    out << "feature";
    for (const auto& col : table.columns) out << ',' << col;
    out << "\n";
    for (std::size_t f = 0; f < table.feature_names.size(); ++f) {
        out << table.feature_names[f];
        for (const auto& cell : table.cells[f]) {
            out << ',' << (cell ? std::to_string(*cell) : "NA");
        }
        out << "\n";
    }
}

}  // namespace busfactor
