#include "dynkit/spring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynkit/errors.hpp"

namespace dynkit {

double spring_accel(double x, double v, const SpringParams& p, double f) {
    if (!(p.m > 0.0) || !(p.k > 0.0) || !(p.b >= 0.0))
        throw std::invalid_argument("spring_accel: require m > 0, k > 0, b >= 0");
    return (f - p.b * v - p.k * x) / p.m;
}

double SpringSeries::energy(const SpringParams& p, std::size_t i) const {
    return 0.5 * p.m * v[i] * v[i] + 0.5 * p.k * x[i] * x[i];
}

SpringSeries simulate_spring(const SpringParams& p, double x0, double v0, double dt, int n) {
    if (!(dt > 0.0)) throw std::invalid_argument("simulate_spring: dt must be > 0");
    if (n < 1) throw std::invalid_argument("simulate_spring: n must be >= 1");
    spring_accel(0.0, 0.0, p, 0.0); // validates parameters

    SpringSeries out;
    out.dt = dt;
    out.x.reserve(static_cast<std::size_t>(n) + 1);
    out.v.reserve(static_cast<std::size_t>(n) + 1);
    out.x.push_back(x0);
    out.v.push_back(v0);

    double x = x0;
    double v = v0;
    const auto accel = [&p](double xx, double vv) { return (-p.b * vv - p.k * xx) / p.m; };

    for (int step = 1; step <= n; ++step) {
        const double k1x = v;
        const double k1v = accel(x, v);
        const double k2x = v + 0.5 * dt * k1v;
        const double k2v = accel(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
        const double k3x = v + 0.5 * dt * k2v;
        const double k3v = accel(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
        const double k4x = v + dt * k3v;
        const double k4v = accel(x + dt * k3x, v + dt * k3v);

        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

        if (!std::isfinite(x) || !std::isfinite(v))
            throw IntegrationError("simulate_spring: state diverged at step " + std::to_string(step));
        out.x.push_back(x);
        out.v.push_back(v);
    }
    return out;
}

} // namespace dynkit
