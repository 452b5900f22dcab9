#include "dynkit/csv.hpp"

#include <cstdio>

namespace dynkit {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_int(std::int64_t value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(value));
    return buf;
}

} // namespace dynkit
