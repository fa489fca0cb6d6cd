#ifndef BUSFACTOR_PRNG_HPP
#define BUSFACTOR_PRNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace busfactor {

// All randomized code draws from mt19937_64 through the helpers below, so a
// given seed yields the same stream on every platform.
using Rng = std::mt19937_64;

// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). Modulo bias is irrelevant at 64 bits.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

}  // namespace busfactor

#endif
