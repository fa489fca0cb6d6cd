#include "busfactor/heuristics.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>

#include "busfactor/errors.hpp"
#include "busfactor/union_find.hpp"

namespace busfactor {

namespace {

// Min-heap entry: (priority, lexicographic person rank). Pop order is
// priority ascending, then person id ascending.
using HeapEntry = std::pair<std::int64_t, int>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>,
                                    std::greater<HeapEntry>>;

RemovalOrder to_order(const BipartiteGraph& g, const std::vector<int>& idx,
                      bool partial) {
    RemovalOrder order;
    order.partial = partial;
    order.people.reserve(idx.size());
    for (int p : idx) order.people.push_back(g.person_id(p));
    return order;
}

}  // namespace

RemovalOrder minimum_coverage_order(const BipartiteGraph& g) {
    if (g.num_people() == 0) {
        throw DomainError("minimum coverage needs at least one person");
    }
    const auto rank_of = g.person_lex_rank();
    const auto by_rank = g.people_by_id();

    // cov[p] = number of still-alive tasks adjacent to p. Tasks covered by
    // an inserted person are deleted, which only ever lowers priorities, so
    // every priority decrease is pushed eagerly and the first pop of a
    // not-yet-inserted person always carries its current coverage.
    std::vector<std::size_t> cov(g.num_people());
    std::vector<char> task_alive(g.num_tasks(), 1);
    std::vector<char> inserted(g.num_people(), 0);

    MinHeap heap;
    for (std::size_t p = 0; p < g.num_people(); ++p) {
        cov[p] = g.person_degree(static_cast<int>(p));
        heap.emplace(static_cast<std::int64_t>(cov[p]), rank_of[p]);
    }

    std::vector<int> insertion;
    insertion.reserve(g.num_people());
    while (!heap.empty()) {
        const auto [priority, rank] = heap.top();
        heap.pop();
        const int p = by_rank[rank];
        if (inserted[p]) continue;
        inserted[p] = 1;
        insertion.push_back(p);

        for (int t : g.person_neighbors(p)) {
            if (!task_alive[t]) continue;
            task_alive[t] = 0;
            for (int q : g.task_neighbors(t)) {
                if (inserted[q]) continue;
                --cov[q];
                heap.emplace(static_cast<std::int64_t>(cov[q]), rank_of[q]);
            }
        }
    }
    std::reverse(insertion.begin(), insertion.end());
    return to_order(g, insertion, false);
}

RemovalOrder maximum_coverage_order(const BipartiteGraph& g) {
    if (g.num_people() == 0) {
        throw DomainError("maximum coverage needs at least one person");
    }
    const auto rank_of = g.person_lex_rank();
    const auto by_rank = g.people_by_id();

    std::vector<char> inserted(g.num_people(), 0);
    std::vector<int> pi;
    pi.reserve(g.num_people());
    std::size_t num_inserted = 0;

    std::vector<char> covered(g.num_tasks(), 0);
    std::vector<std::size_t> alive_task_deg(g.num_tasks(), 0);

    while (num_inserted < g.num_people()) {
        // Round start: every task with at least one remaining person is
        // uncovered again.
        std::fill(covered.begin(), covered.end(), 0);
        std::size_t num_tasks = 0;
        for (std::size_t t = 0; t < g.num_tasks(); ++t) {
            alive_task_deg[t] = 0;
            for (int q : g.task_neighbors(static_cast<int>(t))) {
                if (!inserted[q]) ++alive_task_deg[t];
            }
            if (alive_task_deg[t] > 0) ++num_tasks;
        }
        if (num_tasks == 0) break;

        MinHeap heap;
        for (std::size_t p = 0; p < g.num_people(); ++p) {
            if (inserted[p]) continue;
            heap.emplace(-static_cast<std::int64_t>(g.person_degree(static_cast<int>(p))),
                         rank_of[p]);
        }

        std::size_t num_covered = 0;
        while (num_covered < num_tasks) {
            const auto [priority, rank] = heap.top();
            heap.pop();
            const int p = by_rank[rank];
            std::size_t cov = 0;
            for (int t : g.person_neighbors(p)) {
                if (!covered[t]) ++cov;
            }
            if (-priority != static_cast<std::int64_t>(cov)) {
                heap.emplace(-static_cast<std::int64_t>(cov), rank);
                continue;
            }
            pi.push_back(p);
            inserted[p] = 1;
            ++num_inserted;
            for (int t : g.person_neighbors(p)) {
                covered[t] = 1;
            }
            num_covered += cov;
        }
    }

    // Leftover people cover nothing; append them by descending initial
    // degree, then id.
    std::vector<int> leftovers;
    for (int rank = 0; rank < static_cast<int>(g.num_people()); ++rank) {
        int p = by_rank[rank];
        if (!inserted[p]) leftovers.push_back(p);
    }
    std::stable_sort(leftovers.begin(), leftovers.end(),
                     [&g](int a, int b) { return g.person_degree(a) > g.person_degree(b); });
    pi.insert(pi.end(), leftovers.begin(), leftovers.end());
    return to_order(g, pi, false);
}

RemovalOrder greedy_tau_order(const BipartiteGraph& g, std::size_t threshold) {
    if (threshold > g.num_tasks()) {
        throw DomainError("tau threshold exceeds the number of tasks");
    }
    const auto rank_of = g.person_lex_rank();
    const auto by_rank = g.people_by_id();
    const auto task_rank = g.task_lex_rank();

    // Union-find lives in task lexicographic-rank space so that rank-tied
    // unions pick the lexicographically smaller root.
    TaskUnionFind uf(g.num_tasks());
    std::vector<std::vector<int>> neighbor_ranks(g.num_people());
    for (std::size_t p = 0; p < g.num_people(); ++p) {
        for (int t : g.person_neighbors(static_cast<int>(p))) {
            neighbor_ranks[p].push_back(task_rank[t]);
        }
    }

    std::vector<std::vector<int>> cached_roots(g.num_people());
    MinHeap heap;
    for (int rank = 0; rank < static_cast<int>(g.num_people()); ++rank) {
        const int p = by_rank[rank];
        if (neighbor_ranks[p].empty()) {
            heap.emplace(0, rank);
            continue;
        }
        auto sim = uf.resulting_size(neighbor_ranks[p]);
        cached_roots[p] = std::move(sim.roots);
        heap.emplace(static_cast<std::int64_t>(sim.merged_size), rank);
    }

    std::vector<int> insertion;
    insertion.reserve(g.num_people());
    bool stopped = false;
    while (!heap.empty()) {
        const auto [priority, rank] = heap.top();
        heap.pop();
        const int p = by_rank[rank];

        if (!neighbor_ranks[p].empty()) {
            auto sim = uf.resulting_size(cached_roots[p]);
            if (static_cast<std::int64_t>(sim.merged_size) > priority) {
                heap.emplace(static_cast<std::int64_t>(sim.merged_size), rank);
                cached_roots[p] = std::move(sim.roots);
                continue;
            }
        }
        if (priority > static_cast<std::int64_t>(threshold)) {
            stopped = true;
            break;
        }
        if (!neighbor_ranks[p].empty()) {
            uf.union_all(cached_roots[p]);
        }
        insertion.push_back(p);
    }

    std::reverse(insertion.begin(), insertion.end());
    return to_order(g, insertion, stopped && insertion.size() < g.num_people());
}

RemovalOrder mixed_order(const BipartiteGraph& g, BaseHeuristic base,
                         std::size_t threshold) {
    RemovalOrder tail;
    if (threshold > 0) {
        tail = greedy_tau_order(g, threshold);
    }
    const auto reduced = g.remove_people(tail.people);
    RemovalOrder head;
    if (reduced.num_people() > 0) {
        head = (base == BaseHeuristic::MinCoverage) ? minimum_coverage_order(reduced)
                                                    : maximum_coverage_order(reduced);
    }
    RemovalOrder out;
    out.people = std::move(head.people);
    out.people.insert(out.people.end(), tail.people.begin(), tail.people.end());
    out.partial = false;
    return out;
}

RemovalOrder degree_order(const BipartiteGraph& g) {
    auto pi = g.people_by_id();  // id-ascending base gives the tie-break
    std::stable_sort(pi.begin(), pi.end(), [&g](int a, int b) {
        return g.person_degree(a) > g.person_degree(b);
    });
    return to_order(g, pi, false);
}

RemovalOrder greedy_isolation_order(const BipartiteGraph& g) {
    const auto rank_of = g.person_lex_rank();
    const auto by_rank = g.people_by_id();

    std::vector<std::size_t> task_deg(g.num_tasks());
    std::vector<std::size_t> iso(g.num_people(), 0);
    std::vector<char> removed(g.num_people(), 0);
    for (std::size_t t = 0; t < g.num_tasks(); ++t) {
        task_deg[t] = g.task_degree(static_cast<int>(t));
        if (task_deg[t] == 1) {
            ++iso[g.task_neighbors(static_cast<int>(t))[0]];
        }
    }

    // Isolation counts only grow as people leave; every change is pushed,
    // and entries whose recorded count is stale are discarded on pop.
    MinHeap heap;
    for (std::size_t p = 0; p < g.num_people(); ++p) {
        heap.emplace(-static_cast<std::int64_t>(iso[p]), rank_of[p]);
    }

    std::vector<int> pi;
    pi.reserve(g.num_people());
    while (!heap.empty()) {
        const auto [priority, rank] = heap.top();
        heap.pop();
        const int p = by_rank[rank];
        if (removed[p]) continue;
        if (-priority != static_cast<std::int64_t>(iso[p])) continue;  // stale
        removed[p] = 1;
        pi.push_back(p);
        for (int t : g.person_neighbors(p)) {
            if (task_deg[t] == 0) continue;
            if (--task_deg[t] == 1) {
                for (int q : g.task_neighbors(t)) {
                    if (!removed[q]) {
                        ++iso[q];
                        heap.emplace(-static_cast<std::int64_t>(iso[q]), rank_of[q]);
                        break;
                    }
                }
            }
        }
    }
    return to_order(g, pi, false);
}

BusFactorScore combined_estimate(const BipartiteGraph& g, Measure measure,
                                 const CombinedParams& params) {
    RemovalOrder min_order, max_order;
    double min_score, max_score;
    if (measure == Measure::Avelino) {
        min_order = minimum_coverage_order(g);
        max_order = maximum_coverage_order(g);
        min_score = static_cast<double>(estimate_avelino(g, min_order, params.avelino_t));
        max_score = static_cast<double>(estimate_avelino(g, max_order, params.avelino_t));
    } else {
        const std::size_t threshold = std::min(params.tau_threshold, g.num_tasks());
        min_order = mixed_order(g, BaseHeuristic::MinCoverage, threshold);
        max_order = mixed_order(g, BaseHeuristic::MaxCoverage, threshold);
        min_score = estimate_piccolo(g, min_order);
        max_score = estimate_piccolo(g, max_order);
    }
    if (min_score <= max_score) {
        return BusFactorScore{min_score, std::move(min_order)};
    }
    return BusFactorScore{max_score, std::move(max_order)};
}

}  // namespace busfactor
