#pragma once

#include <span>

namespace dynkit {

struct CircularStats {
    double mean_shift{0.0};   // circular mean minus the intended phase, wrapped to (-pi, pi]
    double sd_phi{0.0};       // circular standard deviation sqrt(-2 ln R)
    double resultant_r{0.0};  // resultant length in [0, 1]
    bool degenerate{false};   // R = 0: mean direction undefined
};

/// Circular mean shift, circular SD and resultant length of a phase series.
CircularStats circular_stats(std::span<const double> series, double phi0);

} // namespace dynkit
