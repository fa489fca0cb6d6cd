#ifndef BUSFACTOR_MEASURES_HPP
#define BUSFACTOR_MEASURES_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "busfactor/graph.hpp"
#include "busfactor/order.hpp"

namespace busfactor {

enum class Measure { Avelino, Piccolo };

enum class MetricKind { Coverage, Tau };

// Metric values indexed by the number of people removed: values[i] is the
// metric after removing the first i people of an order. Length |P|+1,
// non-increasing. The tau curve is literal: a peopleless graph with tasks
// has tau 1 (singleton task components); the area normalization applies its
// terminal-zero convention separately.
struct DecayCurve {
    MetricKind kind = MetricKind::Coverage;
    std::vector<std::size_t> values;
};

DecayCurve coverage_curve(const BipartiteGraph& g, const RemovalOrder& order);
DecayCurve tau_curve(const BipartiteGraph& g, const RemovalOrder& order);

// CSV export: header "removed,value", one row per i = 0..n.
void write_curve_csv(const DecayCurve& curve, std::ostream& out);

// Smallest k such that removing the first k people drops coverage strictly
// below t*|T| (0 < t < 1). Throws DomainError on an empty task set or a
// partial order.
std::size_t estimate_avelino(const BipartiteGraph& g, const RemovalOrder& order,
                             double t);

// estimate_avelino - 1.
std::size_t estimate_zazworka(const BipartiteGraph& g, const RemovalOrder& order,
                              double t);

// Normalized area under the tau decay curve for one order:
//   sum_{i=1..n} (v_{i-1} + v_i) / (m * (2n - 1)),  v_n := 0.
// Always in [0,1]; exactly 1.0 on complete bipartite graphs.
double estimate_piccolo(const BipartiteGraph& g, const RemovalOrder& order);

// Exact minimum over all person subsets, by enumeration. Refuses (GuardError)
// when |P| > 20.
std::size_t exact_avelino(const BipartiteGraph& g, double t);

// Exact minimum of estimate_piccolo over all removal orders, by dynamic
// programming over person subsets. Refuses (GuardError) when |P| > 16.
double exact_piccolo(const BipartiteGraph& g);

struct BusFactorScore {
    double value = 0.0;
    RemovalOrder order;
};

}  // namespace busfactor

#endif
