#ifndef BUSFACTOR_EXPERIMENTS_HPP
#define BUSFACTOR_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "busfactor/generator.hpp"
#include "busfactor/graph.hpp"

namespace busfactor {

// Uniform sampling ranges for the accuracy study, inclusive on both ends.
struct ParamRanges {
    std::pair<std::size_t, std::size_t> n_people{200, 400};
    std::pair<std::size_t, std::size_t> n_tasks{200, 400};
    std::pair<double, double> lambda{0.3, 0.7};
    std::pair<int, int> k{20, 60};
};

// Paper-scale ranges: |P|,|T| in [1000,2000], k in [50,300].
ParamRanges paper_scale_ranges();

struct HeuristicResult {
    std::string heuristic;
    std::string measure;   // "avelino" or "piccolo"
    double score = 0.0;
    double seconds = 0.0;  // wall clock around the heuristic call only
    double gap_ratio = 1.0;
    bool best = false;
};

struct HeuristicReport {
    std::size_t graph_id = 0;
    GeneratorParams params;
    StructuralFeatures features;
    std::vector<HeuristicResult> results;
};

struct AccuracySummaryRow {
    std::string measure;
    std::string heuristic;
    double pct_first = 0.0;
    double gap_avg = 0.0;
    double gap_min = 0.0;
    double gap_max = 0.0;
};

struct AccuracyStudy {
    std::vector<HeuristicReport> reports;
    std::vector<AccuracySummaryRow> summary;
    std::size_t resampled = 0;  // infeasible parameter draws that were redrawn
};

// Generates k graphs with parameters drawn uniformly from `ranges`, scores
// every configured heuristic under both measures (avelino t per
// `avelino_t`, area measure with tau threshold `tau_threshold`), and
// derives gap ratios against the per-graph best. Graph i uses seed+i, so
// results are independent of `jobs`.
AccuracyStudy run_accuracy_study(std::size_t k_graphs, const ParamRanges& ranges,
                                 std::uint64_t seed, std::size_t jobs = 1,
                                 double avelino_t = 0.5,
                                 std::size_t tau_threshold = 10);

// Recomputes the summary rows from per-graph results.
std::vector<AccuracySummaryRow> summarize(const std::vector<HeuristicReport>& reports);

struct TimingRow {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::string heuristic;
    double seconds = 0.0;
};

// For each N: one random bipartite graph with |P|=|T|=N, p = log(5N)/N;
// times minimum_coverage, maximum_coverage and both mixed variants
// (tau threshold 10). Each cell is the minimum of `repeats` runs, single
// threaded.
std::vector<TimingRow> run_timing_study(const std::vector<std::size_t>& sizes,
                                        std::uint64_t seed, int repeats = 3);

struct CorrelationTable {
    std::vector<std::string> feature_names;              // row labels
    std::vector<std::string> columns;                    // "heuristic:measure"
    std::vector<std::vector<std::optional<double>>> cells;  // [feature][column]
};

// Pearson correlation of each structural feature against each heuristic's
// gap ratio. Requires at least 30 reports. Zero-variance columns are
// flagged undefined, never emitted as NaN.
CorrelationTable run_sensitivity_study(const std::vector<HeuristicReport>& reports);

// CSV schemas (see module docs):
//   per-graph: graph_id,heuristic,measure,score,gap_ratio,seconds,<features>
//   summary:   measure,heuristic,pct_first,gap_avg,gap_min,gap_max
//   timings:   n,edges,heuristic,seconds
//   correlations: feature,<one column per heuristic:measure>
void write_per_graph_csv(const std::vector<HeuristicReport>& reports, std::ostream& out);
std::vector<HeuristicReport> read_per_graph_csv(std::istream& in);
void write_summary_csv(const std::vector<AccuracySummaryRow>& rows, std::ostream& out);
void write_timing_csv(const std::vector<TimingRow>& rows, std::ostream& out);
void write_correlation_csv(const CorrelationTable& table, std::ostream& out);

}  // namespace busfactor

#endif
