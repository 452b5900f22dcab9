#pragma once

#include <cstdint>
#include <vector>

#include "dynkit/random.hpp"

namespace dynkit {

/// Relative-phase dynamics coefficients.
///
/// a, b set the symmetric coupling (in-phase and anti-phase attractors),
/// c, d the added asymmetric coupling, delta_omega the frequency detuning,
/// and q the noise strength.
struct HkbParams {
    double a{1.0};
    double b{1.0};
    double c{0.0};
    double d{0.0};
    double delta_omega{0.0}; // rad/s
    double q{0.0};           // noise strength, >= 0
    friend bool operator==(const HkbParams&, const HkbParams&) = default;
};

/// Coupling potential V(phi) = -a cos(phi) - b cos(2 phi).
double hkb_potential(double phi, double a, double b);

/// Deterministic drift:
/// delta_omega - [a sin(phi) + 2b sin(2 phi)] - [c sin(phi) + 2d sin(2 phi)].
/// With c = d = 0 this equals delta_omega - dV/dphi.
double hkb_drift(double phi, const HkbParams& p);

/// Relative-phase trajectory. Samples are stored unwrapped; wrapping to
/// [-pi, pi) belongs to the analysis side.
struct PhaseSeries {
    double dt{0.0};
    std::vector<double> samples; // phi_0 ... phi_n
    std::uint64_t seed{0};
};

/// Euler-Maruyama integration of the phase SDE:
/// phi_{k+1} = phi_k + drift(phi_k) dt + sqrt(q dt) g_k, g_k standard normal.
/// Deterministic when q = 0. Throws IntegrationError if the state diverges.
PhaseSeries integrate_phase(const HkbParams& p, double phi0, double dt, int n, RandomStream rng);

struct PhaseFixedPoint {
    double phi{0.0}; // in [-pi, pi)
    bool stable{false};
};

/// All roots of the drift on [-pi, pi), located by a 721-point sign-change
/// scan plus bisection to 1e-10. Stability is the sign of the drift
/// derivative (central difference). May be empty for large detuning.
std::vector<PhaseFixedPoint> fixed_points(const HkbParams& p);

} // namespace dynkit
