#pragma once

#include <cmath>
#include <stdexcept>

namespace dynkit {

/// Planar vector used for positions, velocities and headings.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }

    double norm() const {
        if (x == 0.0 && y == 0.0) return 0.0;
        const double s = x * x + y * y;
        if (s != 0.0 && std::isfinite(s)) return std::sqrt(s);
        return std::hypot(x, y); // overflow/underflow-safe fallback
    }

    /// Unit vector; the zero vector maps to (0,0) so stationary agents stay directionless.
    Vec2 unit() const {
        const double n = norm();
        if (n == 0.0) return {0.0, 0.0};
        return {x / n, y / n};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }

    friend constexpr bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// c1*v1 + c2*v2. Subsumes addition (c1=c2=1), negation (c2=-1) and scaling (c2=0).
inline Vec2 vec_combine(double c1, const Vec2& v1, double c2, const Vec2& v2) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !v1.finite() || !v2.finite())
        throw std::invalid_argument("vec_combine: non-finite input");
    return {c1 * v1.x + c2 * v2.x, c1 * v1.y + c2 * v2.y};
}

struct NormDir {
    double norm;
    Vec2 dir;
};

/// Euclidean length and direction of v. dir is (0,0) when norm is 0.
inline NormDir vec_norm_dir(const Vec2& v) {
    if (!v.finite()) throw std::invalid_argument("vec_norm_dir: non-finite input");
    const double n = v.norm();
    if (n == 0.0) return {0.0, {0.0, 0.0}};
    return {n, {v.x / n, v.y / n}};
}

} // namespace dynkit
