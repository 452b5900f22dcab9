#pragma once

#include <vector>

namespace dynkit {

struct SpringParams {
    double m{1.0}; // mass > 0
    double b{0.0}; // friction >= 0
    double k{1.0}; // stiffness > 0
};

/// Acceleration of the damped mass-spring system m x'' + b x' + k x = f.
double spring_accel(double x, double v, const SpringParams& p, double f);

struct SpringSeries {
    double dt{0.0};
    std::vector<double> x; // positions, x[0] = x0
    std::vector<double> v; // velocities, v[0] = v0
    double energy(const SpringParams& p, std::size_t i) const;
};

/// Integrate the homogeneous system (f = 0) with classical fixed-step RK4.
/// Throws IntegrationError naming the step if the state leaves the finite range.
SpringSeries simulate_spring(const SpringParams& p, double x0, double v0, double dt, int n);

} // namespace dynkit
