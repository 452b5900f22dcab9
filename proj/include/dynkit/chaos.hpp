#pragma once

#include <cstdint>
#include <vector>

namespace dynkit {

/// Logistic map x -> r x (1 - x). r in [0, 4] keeps orbits inside [0, 1].
struct MapSpec {
    double r{4.0};
};

/// Orbit [x0, x1, ..., xn] of the logistic map (n applications).
std::vector<double> logistic_iterate(const MapSpec& spec, double x0, std::int64_t n);

struct DivergenceTrace {
    double epsilon0{0.0};
    std::vector<double> distances; // distances[k] = |f^k(x0+eps) - f^k(x0)|, distances[0] = eps
};

/// Separation between two orbits started epsilon0 apart, iterate by iterate.
DivergenceTrace orbit_divergence(const MapSpec& spec, double x0, double epsilon0, std::int64_t n);

struct LyapunovEstimate {
    double lambda{0.0};
    std::int64_t skipped{0}; // iterates at exactly x = 0.5 (zero derivative), excluded
    std::int64_t used{0};
};

/// Lyapunov exponent as the long-run average of ln|r(1 - 2x)| along the orbit.
/// The geometric mean of the per-step expansion factors equals exp(lambda).
LyapunovEstimate lyapunov(const MapSpec& spec, double x0, std::int64_t n,
                          std::int64_t burn_in = 1000);

} // namespace dynkit
