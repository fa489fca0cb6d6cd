#ifndef BUSFACTOR_GENERATOR_HPP
#define BUSFACTOR_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "busfactor/graph.hpp"
#include "busfactor/prng.hpp"

namespace busfactor {

struct GeneratorParams {
    std::size_t n_people = 1;
    std::size_t n_tasks = 1;
    double lambda_p = 0.5;   // skew, in (0,1); 1 would be uniform
    double lambda_t = 0.5;
    int k_p = 2;             // maximum person degree, >= 2
    int k_t = 2;             // maximum task degree, >= 2
    std::uint64_t seed = 0;
};

// Throws DomainError when the parameter invariants do not hold
// (0 < lambda < 1, k >= 2, k_p <= n_tasks, k_t <= n_people).
void validate(const GeneratorParams& params);

// Inverse-CDF power-law sampling: x = k_min + k_max * U^(1/lambda), floored
// and clamped to [k_min, k_min + k_max].
std::vector<int> sample_power_law_degrees(double lambda, int k_min, int k_max,
                                          std::size_t count, Rng& rng);

// Equalizes the two degree sums by repeatedly decrementing a random entry
// with degree > 1 on the larger side. Throws GenerationError when the larger
// side cannot shed enough while keeping every degree >= 1.
std::pair<std::vector<int>, std::vector<int>> balance_degree_sums(
    std::vector<int> deg_p, std::vector<int> deg_t, Rng& rng);

// Simple bipartite realization of the given degree sequences: stub matching
// followed by degree-preserving double-edge swaps to repair duplicates.
// Throws GenerationError after 100*|E| failed repair attempts.
BipartiteGraph configuration_model(const std::vector<int>& deg_p,
                                   const std::vector<int>& deg_t, Rng& rng);

// Connects a simple bipartite graph by swapping the task endpoints of one
// edge from each of two distinct components. Degree sequences are preserved
// exactly; swaps that would duplicate an edge are redrawn (bounded).
BipartiteGraph connect_components(BipartiteGraph g, Rng& rng);

// Full pipeline: sample power-law degrees on both sides, balance the sums,
// wire with the configuration model, connect. Deterministic given the seed.
BipartiteGraph generate_power_law_bipartite(const GeneratorParams& params);

// |P| = |T| = n, each (person, task) pair an edge independently with
// probability p (0 < p <= 1).
BipartiteGraph generate_random_bipartite(std::size_t n, double p, Rng& rng);

}  // namespace busfactor

#endif
