#pragma once

namespace dynkit {

/// Core-temperature protocol: the 24-hour baseline cycle, the vest
/// perturbation magnitude, and the pinned gain mapping from temperature
/// deviation to the phase-dynamics coefficients.
///
/// The baseline T0(hour) = t_mean + amplitude * sin(2 pi (hour - 11) / 24)
/// has its minimum at 05:00 and maximum at 17:00. The control parameter is
/// eps = T - T0 (positive for a heat vest, negative for an ice vest).
///
/// Gain mapping (all gains configurable):
///  - d coefficient:   d = base_d + gain_d * eps   (c is held at base_c)
///  - noise strength:  q_eff = q * (1 + noise_gain_circadian * z(hour)
///                                    + noise_gain_perturb  * z(hour) * |eps|)
///    where z(hour) = (t_mean - T0(hour)) / amplitude is +1 at 05:00 and
///    -1 at 17:00. Effective noise is therefore maximal at 05:00, and a vest
///    of either sign widens the dawn/dusk contrast instead of shifting both
///    ends the same way.
struct TemperatureProtocol {
    double t_mean{36.8};    // Celsius
    double amplitude{0.5};  // Celsius, >= 0
    double vest_offset{1.0}; // Celsius applied by HEAT (+) / ICE (-)
    double gain_c{0.0};
    double gain_d{0.1};
    double noise_gain_circadian{0.5};
    double noise_gain_perturb{0.35};
    friend bool operator==(const TemperatureProtocol&, const TemperatureProtocol&) = default;
};

/// Baseline core temperature at a circadian hour in [0, 24).
double circadian_t0(double hour, const TemperatureProtocol& proto);

/// Temperature control parameter eps = T - T0.
double epsilon(double t, double t0);

struct ThermoCoefficients {
    double c{0.0};
    double d{0.0};
};

/// Coefficients under a temperature deviation: c stays at base_c, d is
/// shifted linearly by eps.
ThermoCoefficients thermo_coefficients(double eps, double base_c, double base_d,
                                       const TemperatureProtocol& proto);

/// Circadian factor z(hour) in [-1, 1]: +1 at the 05:00 temperature minimum,
/// -1 at the 17:00 maximum.
double circadian_factor(double hour, const TemperatureProtocol& proto);

/// Noise strength after circadian and perturbation modulation (clamped at 0).
double effective_noise(double q_base, double hour, double eps, const TemperatureProtocol& proto);

} // namespace dynkit
