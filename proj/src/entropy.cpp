#include "dynkit/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "dynkit/errors.hpp"

namespace dynkit {

EntropyReport shannon_entropy(std::span<const double> probs, bool renormalize) {
    if (probs.empty()) throw std::invalid_argument("shannon_entropy: empty probability list");

    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("shannon_entropy: negative or NaN probability");
        sum += p;
    }
    if (sum == 0.0) throw std::invalid_argument("shannon_entropy: all probabilities are zero");

    EntropyReport report;
    report.prob_sum = sum;

    double scale = 1.0;
    if (std::abs(sum - 1.0) > 0.05) {
        if (!renormalize)
            throw std::invalid_argument(
                "shannon_entropy: probability sum deviates from 1 by more than 0.05; "
                "pass renormalize=true to rescale");
        scale = 1.0 / sum;
        report.renormalized = true;
    }

    double h = 0.0;
    for (double p : probs) {
        const double q = p * scale;
        if (q > 0.0) h += q * std::log2(1.0 / q);
    }
    report.h_bits = h;
    return report;
}

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * M_PI); // (-pi, pi]
    if (w == M_PI) w = -M_PI;
    return w;
}

Histogram histogram_probs(std::span<const double> series, int bins, double lo, double hi) {
    if (series.empty()) throw std::invalid_argument("histogram_probs: empty series");
    if (bins < 2) throw std::invalid_argument("histogram_probs: need at least 2 bins");
    if (!(hi > lo)) throw std::invalid_argument("histogram_probs: empty range");

    Histogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    const double width = (hi - lo) / bins;
    for (int i = 0; i <= bins; ++i) h.bin_edges[static_cast<std::size_t>(i)] = lo + width * i;
    h.counts.assign(static_cast<std::size_t>(bins), 0);

    const double span = hi - lo;
    for (double s : series) {
        // wrap into [lo, hi)
        double v = std::fmod(s - lo, span);
        if (v < 0.0) v += span;
        auto idx = static_cast<std::size_t>(v / width);
        if (idx >= static_cast<std::size_t>(bins)) idx = static_cast<std::size_t>(bins) - 1;
        ++h.counts[idx];
    }

    h.total = static_cast<std::int64_t>(series.size());
    h.probs.resize(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i)
        h.probs[i] = static_cast<double>(h.counts[i]) / static_cast<double>(h.total);
    return h;
}

Histogram phase_histogram(std::span<const double> series, int bins) {
    return histogram_probs(series, bins, -M_PI, M_PI);
}

} // namespace dynkit
