#include "dynkit/circular.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynkit {

CircularStats circular_stats(std::span<const double> series, double phi0) {
    if (series.empty()) throw std::invalid_argument("circular_stats: empty series");

    double sum_cos = 0.0;
    double sum_sin = 0.0;
    for (double phi : series) {
        sum_cos += std::cos(phi);
        sum_sin += std::sin(phi);
    }
    const double n = static_cast<double>(series.size());
    const double mean_cos = sum_cos / n;
    const double mean_sin = sum_sin / n;

    CircularStats out;
    out.resultant_r = std::hypot(mean_cos, mean_sin);
    if (out.resultant_r > 1.0) out.resultant_r = 1.0; // rounding guard

    if (out.resultant_r < 1e-12) {
        // Antipodal or uniformly spread samples: no mean direction.
        out.degenerate = true;
        out.resultant_r = 0.0;
        out.mean_shift = 0.0;
        out.sd_phi = std::numeric_limits<double>::infinity();
        return out;
    }

    double shift = std::atan2(mean_sin, mean_cos) - phi0;
    shift = std::remainder(shift, 2.0 * M_PI); // (-pi, pi]
    if (shift == -M_PI) shift = M_PI;
    out.mean_shift = shift;

    const double lnr = std::log(out.resultant_r);
    out.sd_phi = std::sqrt(std::max(0.0, -2.0 * lnr));
    return out;
}

} // namespace dynkit
