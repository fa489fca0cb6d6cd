#include "busfactor/measures.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>

#include "busfactor/errors.hpp"
#include "busfactor/union_find.hpp"

namespace busfactor {

namespace {

// Validates a full permutation of P and resolves it to person indices.
std::vector<int> full_order_indices(const BipartiteGraph& g, const RemovalOrder& order) {
    if (order.partial || order.people.size() != g.num_people()) {
        throw DomainError("a full permutation of the people is required");
    }
    std::vector<int> idx;
    idx.reserve(order.people.size());
    std::vector<char> seen(g.num_people(), 0);
    for (const auto& id : order.people) {
        int p = g.person_index(id);
        if (p < 0) throw DomainError("'" + id + "' is not a person in this graph");
        if (seen[p]) throw DomainError("person '" + id + "' repeated in order");
        seen[p] = 1;
        idx.push_back(p);
    }
    return idx;
}

// Trapezoid numerator of the tau curve with the terminal value forced to 0.
// Integer arithmetic keeps heuristic-vs-oracle comparisons exact.
std::uint64_t tau_area_numerator(const std::vector<std::size_t>& curve) {
    const std::size_t n = curve.size() - 1;
    std::uint64_t num = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint64_t prev = curve[i - 1];
        const std::uint64_t cur = (i == n) ? 0 : curve[i];
        num += prev + cur;
    }
    return num;
}

}  // namespace

DecayCurve coverage_curve(const BipartiteGraph& g, const RemovalOrder& order) {
    const auto idx = full_order_indices(g, order);
    DecayCurve curve{MetricKind::Coverage, {}};
    curve.values.reserve(g.num_people() + 1);

    std::vector<std::size_t> task_deg(g.num_tasks());
    std::size_t covered = 0;
    for (std::size_t t = 0; t < g.num_tasks(); ++t) {
        task_deg[t] = g.task_degree(static_cast<int>(t));
        if (task_deg[t] > 0) ++covered;
    }
    curve.values.push_back(covered);
    for (int p : idx) {
        for (int t : g.person_neighbors(p)) {
            if (--task_deg[t] == 0) --covered;
        }
        curve.values.push_back(covered);
    }
    return curve;
}

DecayCurve tau_curve(const BipartiteGraph& g, const RemovalOrder& order) {
    const auto idx = full_order_indices(g, order);
    const std::size_t n = g.num_people();
    const std::size_t m = g.num_tasks();

    // Build in reverse: start from tasks only, add people back from the end
    // of the order, recording tau before each addition.
    TaskUnionFind uf(m);
    std::vector<std::size_t> values(n + 1);
    values[n] = uf.tau();  // isolated tasks are singleton components
    for (std::size_t i = n; i-- > 0;) {
        const auto& nbrs = g.person_neighbors(idx[i]);
        if (!nbrs.empty()) {
            uf.union_all(nbrs);
        }
        values[i] = uf.tau();
    }
    return DecayCurve{MetricKind::Tau, std::move(values)};
}

void write_curve_csv(const DecayCurve& curve, std::ostream& out) {
    out << "removed,value\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        out << i << ',' << curve.values[i] << "\n";
    }
}

std::size_t estimate_avelino(const BipartiteGraph& g, const RemovalOrder& order,
                             double t) {
    if (g.num_tasks() == 0) {
        throw DomainError("avelino estimate needs at least one task");
    }
    if (t <= 0.0 || t >= 1.0) {
        throw DomainError("threshold t must lie in (0, 1)");
    }
    const auto curve = coverage_curve(g, order);
    const double cutoff = t * static_cast<double>(g.num_tasks());
    for (std::size_t k = 0; k < curve.values.size(); ++k) {
        if (static_cast<double>(curve.values[k]) < cutoff) {
            return k;
        }
    }
    throw DomainError("coverage never fell below the threshold");
}

std::size_t estimate_zazworka(const BipartiteGraph& g, const RemovalOrder& order,
                              double t) {
    return estimate_avelino(g, order, t) - 1;
}

double estimate_piccolo(const BipartiteGraph& g, const RemovalOrder& order) {
    const std::size_t n = g.num_people();
    const std::size_t m = g.num_tasks();
    if (n == 0 || m == 0) {
        throw DomainError("area measure needs at least one person and one task");
    }
    const auto curve = tau_curve(g, order);
    const std::uint64_t num = tau_area_numerator(curve.values);
    return static_cast<double>(num) /
           (static_cast<double>(m) * static_cast<double>(2 * n - 1));
}

std::size_t exact_avelino(const BipartiteGraph& g, double t) {
    const std::size_t n = g.num_people();
    if (n > 20) {
        throw GuardError("exact avelino oracle refuses |P| > 20");
    }
    if (g.num_tasks() == 0) {
        throw DomainError("avelino oracle needs at least one task");
    }
    if (t <= 0.0 || t >= 1.0) {
        throw DomainError("threshold t must lie in (0, 1)");
    }
    const std::size_t m = g.num_tasks();
    const double cutoff = t * static_cast<double>(m);

    // Per-task bitmask of covering people; a task stays covered under
    // removal set S iff mask & ~S is non-empty.
    std::vector<std::uint32_t> task_mask(m, 0);
    for (std::size_t p = 0; p < n; ++p) {
        for (int task : g.person_neighbors(static_cast<int>(p))) {
            task_mask[task] |= (1u << p);
        }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t s = 0; s <= full; ++s) {
        const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
        if (size >= best) continue;
        std::size_t covered = 0;
        for (std::uint32_t mask : task_mask) {
            if (mask & ~s) ++covered;
        }
        if (static_cast<double>(covered) < cutoff) {
            best = size;
        }
        if (s == full) break;  // avoid wraparound at n == 32
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        throw DomainError("coverage never fell below the threshold");
    }
    return best;
}

double exact_piccolo(const BipartiteGraph& g) {
    const std::size_t n = g.num_people();
    const std::size_t m = g.num_tasks();
    if (n > 16) {
        throw GuardError("exact area oracle refuses |P| > 16");
    }
    if (n == 0 || m == 0) {
        throw DomainError("area measure needs at least one person and one task");
    }
    const std::uint32_t full = (1u << n) - 1u;

    // tau of the residual graph after removing the people in `mask`, for
    // every subset; the full-removal value is forced to 0 by the
    // normalization convention.
    std::vector<std::size_t> tau_of(full + 1u, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (mask == full) {
            tau_of[mask] = 0;
            continue;
        }
        TaskUnionFind uf(m);
        for (std::size_t p = 0; p < n; ++p) {
            if (mask & (1u << p)) continue;
            const auto& nbrs = g.person_neighbors(static_cast<int>(p));
            if (!nbrs.empty()) uf.union_all(nbrs);
        }
        tau_of[mask] = uf.tau();
    }

    // Shortest path over the subset lattice; arc S -> S+{p} costs
    // tau(S) + tau(S+{p}).
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> cost(full + 1u, kInf);
    cost[0] = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (cost[mask] == kInf) continue;
        for (std::size_t p = 0; p < n; ++p) {
            const std::uint32_t bit = 1u << p;
            if (mask & bit) continue;
            const std::uint32_t next = mask | bit;
            const std::uint64_t c = cost[mask] + tau_of[mask] + tau_of[next];
            if (c < cost[next]) cost[next] = c;
        }
        if (mask == full) break;
    }
    return static_cast<double>(cost[full]) /
           (static_cast<double>(m) * static_cast<double>(2 * n - 1));
}

}  // namespace busfactor
