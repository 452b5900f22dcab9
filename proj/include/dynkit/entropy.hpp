#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dynkit {

struct EntropyReport {
    double h_bits{0.0};
    double prob_sum{0.0};
    bool renormalized{false};
};

/// Shannon entropy in bits: H = sum over p>0 of p*log2(1/p).
///
/// Probabilities are used as given. Sums within 0.05 of 1 are accepted
/// unchanged (prob_sum records the raw sum); anything further off requires
/// renormalize=true, which rescales to a unit sum and flags the report.
/// Zero-probability terms contribute nothing.
EntropyReport shannon_entropy(std::span<const double> probs, bool renormalize = false);

struct Histogram {
    std::vector<double> bin_edges;       // ascending, size = bins + 1
    std::vector<std::int64_t> counts;    // size = bins; sum == total
    std::vector<double> probs;           // counts / total
    std::int64_t total{0};
};

/// Equal-width histogram of angles wrapped into [lo, hi), probabilities from counts.
Histogram histogram_probs(std::span<const double> series, int bins,
                          double lo, double hi);

/// Convenience: 36-bin phase histogram over [-pi, pi), the default binning for
/// relative-phase entropy.
Histogram phase_histogram(std::span<const double> series, int bins = 36);

/// Wrap an angle into [-pi, pi).
double wrap_phase(double phi);

} // namespace dynkit
