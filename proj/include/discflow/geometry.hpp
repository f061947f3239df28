#pragma once

#include <vector>

#include "discflow/types.hpp"

namespace discflow {

/// Closed sampled loop with a uniform time grid on [0,1].
/// The last point connects back to the first; points.size() >= 8.
struct Loop {
    std::vector<Vec2> points;

    explicit Loop(std::vector<Vec2> pts);

    std::size_t size() const { return points.size(); }
    Loop reversed() const;
    bool is_constant(double tol = 0.0) const;
};

/// Liouville pairing lambda_0(v) at p, with lambda_0 = (x dy - y dx)/2.
inline double liouville_pairing(const Vec2& p, const Vec2& v) {
    return 0.5 * (p.x * v.y - p.y * v.x);
}

/// Polygonal length of the sampled loop (closing edge included).
double loop_length(const Loop& loop);

/// Total lifted angle change about `center`, divided by 2*pi.
///
/// Closed loops return a value within sampling error of an integer; open
/// polylines (orbit segments) are also accepted and the return is real-valued.
/// Throws CenterOnLoopError if a sample is within `center_tol` of the center
/// and SamplingTooCoarseError if a single angular step exceeds pi/2.
double winding_number(const std::vector<Vec2>& polyline, const Vec2& center,
                      bool closed, double center_tol = 1e-12);

inline double winding_number(const Loop& loop, const Vec2& center) {
    return winding_number(loop.points, center, /*closed=*/true);
}

/// Signed enclosed area of the closed loop by the shoelace rule. Equal to the
/// integral of the pulled-back area form over any capping disc, and to the
/// loop integral of lambda_0.
double enclosed_area(const Loop& loop);

/// Loop integral of lambda_0 via trapezoid rule with centered-difference
/// velocities. Algebraically identical to the shoelace area for closed loops.
double loop_liouville_integral(const Loop& loop);

struct DegreeLengthResult {
    double lhs;      // |enclosed_area - pi * round(winding)|
    double rhs;      // loop_length * delta
    double winding;  // raw winding estimate
    bool holds;      // lhs <= rhs + tol
};

/// Checks the degree/length inequality for a loop in the closed annulus
/// 1 <= |z| <= 1 + delta. Throws OutsideAnnulusError if a sample leaves the
/// annulus by more than `annulus_tol`.
DegreeLengthResult degree_length_check(const Loop& loop, double delta,
                                       double tol = 1e-9, double annulus_tol = 1e-9);

} // namespace discflow
