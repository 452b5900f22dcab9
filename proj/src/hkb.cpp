#include "dynkit/hkb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dynkit/errors.hpp"

namespace dynkit {

double hkb_potential(double phi, double a, double b) {
    return -a * std::cos(phi) - b * std::cos(2.0 * phi);
}

double hkb_drift(double phi, const HkbParams& p) {
    const double s1 = std::sin(phi);
    const double s2 = std::sin(2.0 * phi);
    return p.delta_omega - (p.a * s1 + 2.0 * p.b * s2) - (p.c * s1 + 2.0 * p.d * s2);
}

PhaseSeries integrate_phase(const HkbParams& p, double phi0, double dt, int n, RandomStream rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_phase: dt must be > 0");
    if (n < 1) throw std::invalid_argument("integrate_phase: n must be >= 1");
    if (!(p.q >= 0.0)) throw std::invalid_argument("integrate_phase: noise strength q must be >= 0");

    PhaseSeries series;
    series.dt = dt;
    series.seed = rng.state();
    series.samples.reserve(static_cast<std::size_t>(n) + 1);
    series.samples.push_back(phi0);

    const double noise_scale = std::sqrt(p.q * dt);
    double phi = phi0;
    for (int k = 1; k <= n; ++k) {
        phi += hkb_drift(phi, p) * dt;
        if (noise_scale > 0.0) phi += noise_scale * rng.normal();
        if (!std::isfinite(phi))
            throw IntegrationError("integrate_phase: state diverged at step " + std::to_string(k));
        series.samples.push_back(phi);
    }
    return series;
}

std::vector<PhaseFixedPoint> fixed_points(const HkbParams& p) {
    constexpr int kScanPoints = 721; // both endpoints included, 720 intervals
    constexpr double kRootTol = 1e-10;

    const auto drift = [&p](double phi) { return hkb_drift(phi, p); };
    // Analytic zeros at grid points (0, +-pi) evaluate to O(1e-16) residue, not
    // exactly zero; treat values below this floor as roots of the scan.
    const double zero_floor =
        1e-13 * (std::abs(p.a) + 2.0 * std::abs(p.b) + std::abs(p.c) + 2.0 * std::abs(p.d) +
                 std::abs(p.delta_omega) + 1.0);

    const double step = 2.0 * M_PI / (kScanPoints - 1);
    std::vector<double> val(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) val[static_cast<std::size_t>(i)] = drift(-M_PI + step * i);

    std::vector<double> roots;
    for (int i = 0; i < kScanPoints; ++i) {
        if (std::abs(val[static_cast<std::size_t>(i)]) < zero_floor) roots.push_back(-M_PI + step * i);
    }
    for (int i = 0; i + 1 < kScanPoints; ++i) {
        const double flo0 = val[static_cast<std::size_t>(i)];
        const double fhi0 = val[static_cast<std::size_t>(i) + 1];
        if (std::abs(flo0) < zero_floor || std::abs(fhi0) < zero_floor) continue; // grid hit already recorded
        if (flo0 * fhi0 >= 0.0) continue;
        double lo = -M_PI + step * i;
        double hi = lo + step;
        double flo = flo0;
        while (hi - lo > kRootTol) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = drift(mid);
            if (fmid == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fmid < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }

    // Wrap to [-pi, pi), sort, and drop duplicates (including the +-pi seam pair).
    for (double& r : roots) {
        if (r >= M_PI) r -= 2.0 * M_PI;
        if (r < -M_PI) r += 2.0 * M_PI;
    }
    std::sort(roots.begin(), roots.end());
    std::vector<PhaseFixedPoint> out;
    constexpr double kDedup = 1e-7;
    for (double r : roots) {
        if (!out.empty() && std::abs(r - out.back().phi) < kDedup) continue;
        if (!out.empty() && std::abs(r - 2.0 * M_PI - out.front().phi) < kDedup) continue;
        const double h = 1e-6;
        const double slope = (drift(r + h) - drift(r - h)) / (2.0 * h);
        out.push_back({r, slope < 0.0});
    }
    return out;
}

} // namespace dynkit
