#include "discflow/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "discflow/errors.hpp"

namespace discflow {

Loop::Loop(std::vector<Vec2> pts) : points(std::move(pts)) {
    if (points.size() < 8) {
        throw InvalidShapeError("Loop needs at least 8 samples");
    }
}

Loop Loop::reversed() const {
    std::vector<Vec2> rev(points.rbegin(), points.rend());
    return Loop(std::move(rev));
}

bool Loop::is_constant(double tol) const {
    for (const auto& p : points) {
        if ((p - points.front()).norm() > tol) return false;
    }
    return true;
}

double loop_length(const Loop& loop) {
    long double total = 0.0L;
    const auto& p = loop.points;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += (p[(i + 1) % n] - p[i]).norm();
    }
    return static_cast<double>(total);
}

double winding_number(const std::vector<Vec2>& polyline, const Vec2& center,
                      bool closed, double center_tol) {
    const std::size_t n = polyline.size();
    long double total = 0.0L;
    Vec2 prev = polyline.front() - center;
    if (prev.norm() <= center_tol) {
        throw CenterOnLoopError("sample coincides with the winding center");
    }
    const std::size_t steps = closed ? n : n - 1;
    for (std::size_t i = 1; i <= steps; ++i) {
        Vec2 cur = polyline[i % n] - center;
        if (cur.norm() <= center_tol) {
            throw CenterOnLoopError("sample coincides with the winding center");
        }
        // Continuous lift: each increment is the angle of cur relative to prev.
        const double dtheta = std::atan2(prev.cross(cur), prev.dot(cur));
        if (std::fabs(dtheta) > 0.5 * kPi) {
            throw SamplingTooCoarseError(
                "angular step exceeds pi/2; refine the sampling");
        }
        total += dtheta;
        prev = cur;
    }
    return static_cast<double>(total / (2.0L * kPi));
}

double enclosed_area(const Loop& loop) {
    const auto& p = loop.points;
    const std::size_t n = p.size();
    long double twice = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        twice += p[i].cross(p[(i + 1) % n]);
    }
    return static_cast<double>(0.5L * twice);
}

double loop_liouville_integral(const Loop& loop) {
    const auto& p = loop.points;
    const std::size_t n = p.size();
    // lambda_0(x, xdot) with centered differences, trapezoid over one period.
    // The 1/(2h) of the difference and the h of the quadrature cancel.
    long double total = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prev = p[(i + n - 1) % n];
        const Vec2& next = p[(i + 1) % n];
        total += liouville_pairing(p[i], (next - prev) * 0.5);
    }
    return static_cast<double>(total);
}

DegreeLengthResult degree_length_check(const Loop& loop, double delta,
                                       double tol, double annulus_tol) {
    for (const auto& p : loop.points) {
        const double r = p.norm();
        if (r < 1.0 - annulus_tol || r > 1.0 + delta + annulus_tol) {
            throw OutsideAnnulusError("loop sample outside the annulus [1, 1+delta]");
        }
    }
    DegreeLengthResult res;
    res.winding = loop.is_constant(1e-15) ? 0.0 : winding_number(loop, Vec2{0.0, 0.0});
    const double area = enclosed_area(loop);
    res.lhs = std::fabs(area - kPi * std::round(res.winding));
    res.rhs = loop_length(loop) * delta;
    res.holds = res.lhs <= res.rhs + tol;
    return res;
}

} // namespace discflow
