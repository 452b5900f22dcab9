#pragma once

#include <span>
#include <vector>

namespace dynkit {

/// Standard scores (x - mean) / sigma with population sigma.
/// Throws DegenerateError when sigma is zero.
std::vector<double> zscore(std::span<const double> series);

/// Sample Pearson correlation in [-1, 1]. Both series must be nonconstant
/// and of equal length >= 3.
double pearson_r(std::span<const double> x, std::span<const double> y);

} // namespace dynkit
