#include "dynkit/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "dynkit/errors.hpp"

namespace dynkit {

std::vector<double> zscore(std::span<const double> series) {
    if (series.size() < 2) throw std::invalid_argument("zscore: need at least 2 values");

    const double n = static_cast<double>(series.size());
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= n;

    double var = 0.0;
    for (double v : series) var += (v - mean) * (v - mean);
    var /= n; // population variance
    const double sigma = std::sqrt(var);
    if (sigma == 0.0) throw DegenerateError("zscore: zero standard deviation");

    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back((v - mean) / sigma);
    return out;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson_r: length mismatch");
    if (x.size() < 3) throw std::invalid_argument("pearson_r: need at least 3 pairs");

    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw DegenerateError("pearson_r: constant input series");

    double r = sxy / std::sqrt(sxx * syy);
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

} // namespace dynkit
