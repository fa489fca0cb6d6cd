#include "busfactor/stats.hpp"

#include <cmath>

#include "busfactor/errors.hpp"

namespace busfactor {

std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw DomainError("pearson: length mismatch");
    }
    if (xs.size() < 2) {
        throw DomainError("pearson: need at least two samples");
    }
    // A constant sequence must come out undefined even when the rounded mean
    // differs from the common value by an ulp.
    auto constant = [](std::span<const double> v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] != v[0]) return false;
        }
        return true;
    };
    if (constant(xs) || constant(ys)) {
        return std::nullopt;
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt;
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace busfactor
