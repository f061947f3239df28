#pragma once

#include <cmath>

namespace discflow {

inline constexpr double kPi = 3.14159265358979323846;

/// 2-D point / tangent vector on the plane, double precision.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double c) const { return {x * c, y * c}; }
    friend constexpr Vec2 operator*(double c, const Vec2& v) { return {v.x * c, v.y * c}; }
    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }

    /// Squared radius s = x^2 + y^2, the canonical radial variable.
    constexpr double s() const { return x * x + y * y; }
    double angle() const { return std::atan2(y, x); }
};

/// 2x2 real matrix, row-major.
struct Mat2 {
    double a11{1.0}, a12{0.0};
    double a21{0.0}, a22{1.0};

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        return {c, -s, s, c};
    }

    constexpr double det() const { return a11 * a22 - a12 * a21; }

    constexpr Vec2 operator*(const Vec2& v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
    constexpr Mat2 operator*(const Mat2& m) const {
        return {a11 * m.a11 + a12 * m.a21, a11 * m.a12 + a12 * m.a22,
                a21 * m.a11 + a22 * m.a21, a21 * m.a12 + a22 * m.a22};
    }
    constexpr Mat2 operator+(const Mat2& m) const {
        return {a11 + m.a11, a12 + m.a12, a21 + m.a21, a22 + m.a22};
    }
    constexpr Mat2 operator-(const Mat2& m) const {
        return {a11 - m.a11, a12 - m.a12, a21 - m.a21, a22 - m.a22};
    }
    constexpr Mat2 operator*(double c) const { return {a11 * c, a12 * c, a21 * c, a22 * c}; }

    double max_abs() const {
        return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                        std::max(std::fabs(a21), std::fabs(a22)));
    }
};

/// Symmetric 2x2 Hessian of a scalar field.
struct Hess2 {
    double xx{0.0}, xy{0.0}, yy{0.0};
};

} // namespace discflow
