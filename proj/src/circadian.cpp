#include "dynkit/circadian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dynkit {

double circadian_t0(double hour, const TemperatureProtocol& proto) {
    if (!(hour >= 0.0 && hour < 24.0))
        throw std::invalid_argument("circadian_t0: hour must lie in [0, 24)");
    if (!(proto.amplitude >= 0.0))
        throw std::invalid_argument("circadian_t0: amplitude must be >= 0");
    return proto.t_mean + proto.amplitude * std::sin(2.0 * M_PI * (hour - 11.0) / 24.0);
}

double epsilon(double t, double t0) { return t - t0; }

ThermoCoefficients thermo_coefficients(double eps, double base_c, double base_d,
                                       const TemperatureProtocol& proto) {
    return {base_c, base_d + proto.gain_d * eps};
}

double circadian_factor(double hour, const TemperatureProtocol& proto) {
    if (proto.amplitude == 0.0) return 0.0;
    return (proto.t_mean - circadian_t0(hour, proto)) / proto.amplitude;
}

double effective_noise(double q_base, double hour, double eps, const TemperatureProtocol& proto) {
    const double z = circadian_factor(hour, proto);
    const double factor =
        1.0 + proto.noise_gain_circadian * z + proto.noise_gain_perturb * z * std::abs(eps);
    return std::max(0.0, q_base * factor);
}

} // namespace dynkit
