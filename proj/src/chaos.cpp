#include "dynkit/chaos.hpp"

#include <cmath>
#include <stdexcept>

namespace dynkit {

namespace {

void check_domain(const MapSpec& spec, double x0) {
    if (!(spec.r >= 0.0 && spec.r <= 4.0))
        throw std::invalid_argument("logistic map: r must lie in [0, 4]");
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw std::invalid_argument("logistic map: x0 must lie in [0, 1]");
}

inline double step(double r, double x) { return r * x * (1.0 - x); }

} // namespace

std::vector<double> logistic_iterate(const MapSpec& spec, double x0, std::int64_t n) {
    check_domain(spec, x0);
    if (n < 1) throw std::invalid_argument("logistic_iterate: n must be >= 1");

    std::vector<double> orbit;
    orbit.reserve(static_cast<std::size_t>(n) + 1);
    orbit.push_back(x0);
    double x = x0;
    for (std::int64_t k = 0; k < n; ++k) {
        x = step(spec.r, x);
        orbit.push_back(x);
    }
    return orbit;
}

DivergenceTrace orbit_divergence(const MapSpec& spec, double x0, double epsilon0, std::int64_t n) {
    check_domain(spec, x0);
    if (!(epsilon0 > 0.0)) throw std::invalid_argument("orbit_divergence: epsilon0 must be > 0");
    if (!(x0 + epsilon0 <= 1.0))
        throw std::invalid_argument("orbit_divergence: x0 + epsilon0 must stay in [0, 1]");
    if (n < 1) throw std::invalid_argument("orbit_divergence: n must be >= 1");

    DivergenceTrace trace;
    trace.epsilon0 = epsilon0;
    trace.distances.reserve(static_cast<std::size_t>(n) + 1);

    double x = x0;
    double y = x0 + epsilon0;
    trace.distances.push_back(epsilon0);
    for (std::int64_t k = 0; k < n; ++k) {
        x = step(spec.r, x);
        y = step(spec.r, y);
        trace.distances.push_back(std::abs(y - x));
    }
    return trace;
}

LyapunovEstimate lyapunov(const MapSpec& spec, double x0, std::int64_t n, std::int64_t burn_in) {
    check_domain(spec, x0);
    if (n < 1000) throw std::invalid_argument("lyapunov: need n >= 1000 iterates");
    if (burn_in < 0) throw std::invalid_argument("lyapunov: burn_in must be >= 0");

    // Starting points that map onto the absorbing origin (0, 1 and their
    // preimages, e.g. 0.5 at r = 4) would pin the orbit to the x = 0 fixed
    // point; nudge exact hits off by a fixed perturbation.
    const auto guard = [](double x) {
        if (x == 0.0) return 1e-12;
        if (x == 1.0) return 1.0 - 1e-12;
        return x;
    };

    double x = guard(x0);
    for (std::int64_t k = 0; k < burn_in; ++k) x = guard(step(spec.r, x));

    LyapunovEstimate est;
    double sum = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const double deriv = spec.r * (1.0 - 2.0 * x);
        if (deriv == 0.0) {
            ++est.skipped; // x hit 0.5 exactly; ln|f'| undefined there
        } else {
            sum += std::log(std::abs(deriv));
            ++est.used;
        }
        x = guard(step(spec.r, x));
    }
    est.lambda = est.used > 0 ? sum / static_cast<double>(est.used) : 0.0;
    return est;
}

} // namespace dynkit
