#ifndef BUSFACTOR_STATS_HPP
#define BUSFACTOR_STATS_HPP

#include <optional>
#include <span>

namespace busfactor {

// Sample Pearson correlation coefficient. Returns nullopt when either input
// has zero variance. Throws DomainError on length mismatch or length < 2.
std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys);

}  // namespace busfactor

#endif
