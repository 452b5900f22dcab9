#pragma once

#include <cstdint>
#include <string>

namespace dynkit {

/// Round-trip decimal rendering of a double (17 significant digits, "%.17g").
/// Pinned so CSV bytes and digests are stable across platforms.
std::string format_double(double value);

std::string format_int(std::int64_t value);

} // namespace dynkit
