#include "busfactor/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "busfactor/errors.hpp"

namespace busfactor {

namespace {

std::string padded_id(char prefix, std::size_t index, std::size_t count) {
    std::size_t width = 1;
    for (std::size_t v = count > 0 ? count - 1 : 0; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(index);
    std::string out(1, prefix);
    out.append(width - digits.size(), '0');
    out += digits;
    return out;
}

// Builds a graph over p0..p{n-1} / t0..t{m-1} (zero padded so id order and
// index order agree) from an index edge list.
BipartiteGraph build_graph(std::size_t n_people, std::size_t n_tasks,
                           const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g;
    for (std::size_t i = 0; i < n_people; ++i) g.add_person(padded_id('p', i, n_people));
    for (std::size_t j = 0; j < n_tasks; ++j) g.add_task(padded_id('t', j, n_tasks));
    for (const auto& [p, t] : edges) g.add_edge_unchecked(p, t);
    return g;
}

std::uint64_t pair_key(int p, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) |
           static_cast<std::uint32_t>(t);
}

}  // namespace

void validate(const GeneratorParams& params) {
    if (params.n_people < 1 || params.n_tasks < 1) {
        throw DomainError("need at least one person and one task");
    }
    if (params.lambda_p <= 0.0 || params.lambda_p >= 1.0 ||
        params.lambda_t <= 0.0 || params.lambda_t >= 1.0) {
        throw DomainError("lambda must lie in (0, 1)");
    }
    if (params.k_p < 2 || params.k_t < 2) {
        throw DomainError("maximum degrees must be at least 2");
    }
    if (static_cast<std::size_t>(params.k_p) > params.n_tasks ||
        static_cast<std::size_t>(params.k_t) > params.n_people) {
        throw DomainError("a maximum degree cannot exceed the opposite side size");
    }
}

std::vector<int> sample_power_law_degrees(double lambda, int k_min, int k_max,
                                          std::size_t count, Rng& rng) {
    if (lambda <= 0.0 || lambda >= 1.0) {
        throw DomainError("lambda must lie in (0, 1)");
    }
    if (k_min < 1 || k_max < 1) {
        throw DomainError("degree bounds must be at least 1");
    }
    std::vector<int> degrees;
    degrees.reserve(count);
    const double inv_lambda = 1.0 / lambda;
    for (std::size_t i = 0; i < count; ++i) {
        const double u = 1.0 - uniform01(rng);  // (0, 1]
        const double x = static_cast<double>(k_min) +
                         static_cast<double>(k_max) * std::pow(u, inv_lambda);
        int d = static_cast<int>(std::floor(x));
        d = std::clamp(d, k_min, k_min + k_max);
        degrees.push_back(d);
    }
    return degrees;
}

std::pair<std::vector<int>, std::vector<int>> balance_degree_sums(
    std::vector<int> deg_p, std::vector<int> deg_t, Rng& rng) {
    if (deg_p.empty() || deg_t.empty()) {
        throw GenerationError("empty degree sequence");
    }
    auto sum = [](const std::vector<int>& v) {
        return std::accumulate(v.begin(), v.end(), std::int64_t{0});
    };
    std::int64_t sp = sum(deg_p);
    std::int64_t st = sum(deg_t);
    // Indices with degree > 1 on whichever side is currently larger.
    std::vector<std::size_t> candidates;
    while (sp != st) {
        auto& larger = (sp > st) ? deg_p : deg_t;
        candidates.clear();
        for (std::size_t i = 0; i < larger.size(); ++i) {
            if (larger[i] > 1) candidates.push_back(i);
        }
        if (candidates.empty()) {
            throw GenerationError(
                "degree sums cannot be balanced without a zero degree; "
                "choose different generator parameters");
        }
        larger[candidates[uniform_index(rng, candidates.size())]] -= 1;
        (sp > st) ? --sp : --st;
    }
    return {std::move(deg_p), std::move(deg_t)};
}

BipartiteGraph configuration_model(const std::vector<int>& deg_p,
                                   const std::vector<int>& deg_t, Rng& rng) {
    std::vector<int> stubs_p, stubs_t;
    for (std::size_t i = 0; i < deg_p.size(); ++i) {
        stubs_p.insert(stubs_p.end(), deg_p[i], static_cast<int>(i));
    }
    for (std::size_t j = 0; j < deg_t.size(); ++j) {
        stubs_t.insert(stubs_t.end(), deg_t[j], static_cast<int>(j));
    }
    if (stubs_p.size() != stubs_t.size()) {
        throw GenerationError("degree sums differ");
    }
    shuffle_vec(stubs_t, rng);

    const std::size_t n_edges = stubs_p.size();
    std::vector<std::pair<int, int>> edges(n_edges);
    std::unordered_map<std::uint64_t, int> count;
    count.reserve(n_edges * 2);
    for (std::size_t k = 0; k < n_edges; ++k) {
        edges[k] = {stubs_p[k], stubs_t[k]};
        ++count[pair_key(stubs_p[k], stubs_t[k])];
    }

    // Repair duplicates with degree-preserving double-edge swaps against a
    // uniformly random partner edge.
    std::size_t attempts = 0;
    const std::size_t max_attempts = 100 * n_edges;
    for (std::size_t k = 0; k < n_edges; ++k) {
        while (count[pair_key(edges[k].first, edges[k].second)] > 1) {
            if (++attempts > max_attempts) {
                throw GenerationError(
                    "could not realize the degree sequence without duplicate "
                    "edges; choose different generator parameters");
            }
            const std::size_t j = uniform_index(rng, n_edges);
            auto [p1, t1] = edges[k];
            auto [p2, t2] = edges[j];
            if (j == k || p1 == p2 || t1 == t2) continue;
            if (count.count(pair_key(p1, t2)) && count[pair_key(p1, t2)] > 0) continue;
            if (count.count(pair_key(p2, t1)) && count[pair_key(p2, t1)] > 0) continue;
            --count[pair_key(p1, t1)];
            --count[pair_key(p2, t2)];
            ++count[pair_key(p1, t2)];
            ++count[pair_key(p2, t1)];
            edges[k] = {p1, t2};
            edges[j] = {p2, t1};
        }
    }
    return build_graph(deg_p.size(), deg_t.size(), edges);
}

BipartiteGraph connect_components(BipartiteGraph g, Rng& rng) {
    // Swapping the task endpoints of two edges from different components
    // merges the two components only when the first edge lies on a cycle
    // (otherwise the swap just re-pairs the tree halves). So: pick the first
    // edge uniformly among non-bridge edges and the partner edge uniformly
    // among edges of other components; each swap then reduces the component
    // count by exactly one. A graph with no cycle edge left but several
    // components cannot be connected while preserving degrees.
    const std::size_t n = g.num_people();
    const std::size_t m = g.num_tasks();
    const std::size_t n_nodes = n + m;

    while (true) {
        // Flat edge list + adjacency with edge ids (tasks offset by n).
        std::vector<std::pair<int, int>> edges;
        edges.reserve(g.num_edges());
        for (std::size_t p = 0; p < n; ++p) {
            for (int t : g.person_neighbors(static_cast<int>(p))) {
                edges.push_back({static_cast<int>(p), t});
            }
        }
        const std::size_t n_edges = edges.size();
        std::vector<std::vector<std::pair<int, std::size_t>>> adj(n_nodes);
        for (std::size_t id = 0; id < n_edges; ++id) {
            const auto [p, t] = edges[id];
            adj[p].push_back({static_cast<int>(n) + t, id});
            adj[n + t].push_back({p, id});
        }

        // One DFS pass labels components and marks bridges.
        std::vector<int> comp(n_nodes, -1);
        std::vector<int> disc(n_nodes, -1);
        std::vector<int> low(n_nodes, 0);
        std::vector<char> is_bridge(n_edges, 0);
        int timer = 0;
        int n_comp = 0;
        struct Frame {
            int v;
            std::size_t idx;
            std::size_t parent_edge;
        };
        std::vector<Frame> stack;
        constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);
        for (std::size_t s = 0; s < n_nodes; ++s) {
            if (disc[s] >= 0) continue;
            disc[s] = low[s] = timer++;
            comp[s] = n_comp;
            stack.assign(1, {static_cast<int>(s), 0, kNoEdge});
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.idx < adj[f.v].size()) {
                    const auto [w, id] = adj[f.v][f.idx++];
                    if (id == f.parent_edge) continue;
                    if (disc[w] < 0) {
                        disc[w] = low[w] = timer++;
                        comp[w] = n_comp;
                        stack.push_back({w, 0, id});
                    } else {
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    const int v = f.v;
                    const std::size_t pe = f.parent_edge;
                    stack.pop_back();
                    if (!stack.empty()) {
                        const int u = stack.back().v;
                        low[u] = std::min(low[u], low[v]);
                        if (low[v] > disc[u]) is_bridge[pe] = 1;
                    }
                }
            }
            ++n_comp;
        }
        if (n_comp <= 1) break;

        std::vector<std::size_t> cycle_edges;
        for (std::size_t id = 0; id < n_edges; ++id) {
            if (!is_bridge[id]) cycle_edges.push_back(id);
        }
        if (cycle_edges.empty()) {
            throw GenerationError(
                "graph cannot be connected by degree-preserving rewiring; "
                "choose different generator parameters");
        }
        const auto [p1, t1] = edges[cycle_edges[uniform_index(rng, cycle_edges.size())]];
        const int c1 = comp[p1];
        std::vector<std::size_t> partner_edges;
        for (std::size_t id = 0; id < n_edges; ++id) {
            if (comp[edges[id].first] != c1) partner_edges.push_back(id);
        }
        if (partner_edges.empty()) {
            // Remaining components are edgeless (degree-0 nodes); unreachable.
            throw GenerationError(
                "graph cannot be connected by degree-preserving rewiring; "
                "choose different generator parameters");
        }
        const auto [p2, t2] = edges[partner_edges[uniform_index(rng, partner_edges.size())]];

        // Swap the task endpoints: (p1,t1),(p2,t2) -> (p1,t2),(p2,t1). The
        // new edges run between distinct components, so they cannot already
        // exist.
        for (auto& e : edges) {
            if (e.first == p1 && e.second == t1) {
                e.second = t2;
            } else if (e.first == p2 && e.second == t2) {
                e.second = t1;
            }
        }
        BipartiteGraph next;
        for (std::size_t i = 0; i < n; ++i) next.add_person(g.person_id(static_cast<int>(i)));
        for (std::size_t j = 0; j < m; ++j) next.add_task(g.task_id(static_cast<int>(j)));
        for (const auto& [p, t] : edges) next.add_edge_unchecked(p, t);
        g = std::move(next);
    }
    return g;
}

BipartiteGraph generate_power_law_bipartite(const GeneratorParams& params) {
    validate(params);
    Rng rng(params.seed);
    auto deg_p = sample_power_law_degrees(params.lambda_p, 1, params.k_p - 1,
                                          params.n_people, rng);
    auto deg_t = sample_power_law_degrees(params.lambda_t, 1, params.k_t - 1,
                                          params.n_tasks, rng);
    auto [bp, bt] = balance_degree_sums(std::move(deg_p), std::move(deg_t), rng);
    auto g = configuration_model(bp, bt, rng);
    return connect_components(std::move(g), rng);
}

BipartiteGraph generate_random_bipartite(std::size_t n, double p, Rng& rng) {
    if (n < 1) {
        throw DomainError("need at least one node per side");
    }
    if (p <= 0.0 || p > 1.0) {
        throw DomainError("connection probability must lie in (0, 1]");
    }
    std::vector<std::pair<int, int>> edges;
    if (p == 1.0) {
        edges.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
        }
    } else {
        // Geometric skipping over the n*n cell grid.
        const double log_q = std::log1p(-p);
        const double total = static_cast<double>(n) * static_cast<double>(n);
        double pos = -1.0;
        while (true) {
            double u = uniform01(rng);
            if (u <= 0.0) u = 0x1.0p-53;
            pos += 1.0 + std::floor(std::log(u) / log_q);
            if (pos >= total) break;
            const auto cell = static_cast<std::uint64_t>(pos);
            edges.push_back({static_cast<int>(cell / n), static_cast<int>(cell % n)});
        }
    }
    return build_graph(n, n, edges);
}

}  // namespace busfactor
