#ifndef BUSFACTOR_HEURISTICS_HPP
#define BUSFACTOR_HEURISTICS_HPP

#include <cstddef>

#include "busfactor/graph.hpp"
#include "busfactor/measures.hpp"
#include "busfactor/order.hpp"

namespace busfactor {

// All heuristics return a removal order: the people whose early removal is
// expected to degrade the graph fastest come first. Ties are broken by
// person identifier, ascending, everywhere.

// Iterative peeling by minimum current coverage (lazy min-heap). The
// returned order is the reverse of the greedy insertion sequence.
RemovalOrder minimum_coverage_order(const BipartiteGraph& g);

// Layered peeling by maximum current coverage. Each round greedily covers
// all remaining connected tasks, then deletes the selected people; leftover
// people with nothing to cover are appended by descending initial degree.
RemovalOrder maximum_coverage_order(const BipartiteGraph& g);

// Constructive greedy over a task union-find: insert the person whose
// addition grows the largest task component the least, stopping once the
// next insertion would push the component size past `threshold`. Returns
// the reversed insertion sequence, flagged partial when people remain.
RemovalOrder greedy_tau_order(const BipartiteGraph& g, std::size_t threshold);

enum class BaseHeuristic { MinCoverage, MaxCoverage };

// pi_r = greedy_tau_order(g, threshold); pi_l = base heuristic on g with
// pi_r's people deleted; result [pi_l | pi_r], always a full permutation.
// threshold 0 skips the tau stage entirely and equals the base heuristic.
RemovalOrder mixed_order(const BipartiteGraph& g, BaseHeuristic base,
                         std::size_t threshold);

// People by decreasing initial degree.
RemovalOrder degree_order(const BipartiteGraph& g);

// Baseline: repeatedly remove the person currently isolating the most tasks
// (tasks whose entire remaining neighborhood is that person).
RemovalOrder greedy_isolation_order(const BipartiteGraph& g);

struct CombinedParams {
    double avelino_t = 0.5;
    std::size_t tau_threshold = 10;
};

// Ensemble: evaluates both the Minimum and Maximum Coverage orders (their
// mixed variants for the area measure) and returns the smaller score with
// the winning order.
BusFactorScore combined_estimate(const BipartiteGraph& g, Measure measure,
                                 const CombinedParams& params);

}  // namespace busfactor

#endif
