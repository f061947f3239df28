#pragma once

#include <vector>

namespace discflow {

/// Radial collar reparametrization rho_n used to build compactly supported
/// approximations: rho_n(r) = r for r <= 0, rho_n >= 0, rho_n(r) = 0 for
/// r >= 1/n, with |rho_n'| <= |rho'| for the base profile.
///
/// The base profile is rho(r) = r * exp(-r^2/(1-r)^2 * step(r/r0)) on (0,1),
/// blended so it matches the identity to all orders at 0 and is flat zero at
/// 1; then rho_n(r) = rho(n r)/n.
///
/// The refined variant additionally satisfies 1 >= rho_n' >= -1/n. It is the
/// integral of an explicit slope field (rise of slope <= 1 near 0, descent
/// clamped at -d_n with d_n <= 1/n), tabulated once per construction.
class CollarMap {
public:
    CollarMap(int n, bool refined);

    /// rho_n(r).
    double value(double r) const;
    /// rho_n'(r). For the refined variant this equals the pre-scaled slope
    /// field, so sampling it over [0, 1/n] samples rho-tilde_n' over [0, 1].
    double slope(double r) const;

    int n() const { return n_; }
    bool refined() const { return refined_; }
    double support_width() const { return 1.0 / n_; }

    /// The base profile rho and its derivative (closed form).
    static double base_value(double r);
    static double base_slope(double r);

private:
    double tilde_value(double x) const;  // rho-tilde_n(x) for x in [0, 1]
    double tilde_slope(double x) const;  // slope field v_n(x)

    struct Segment {
        double lo, hi;
        int panels;
        std::vector<double> cum;  // cumulative integral of v at panel edges
    };

    int n_;
    bool refined_;
    double rise_end_;   // a_n = 1/(2n), end of the unit-slope rise
    double edge_;       // 1/8, width of the bump shoulders
    double descent_;    // d_n, magnitude of the clamped descent slope
    std::vector<Segment> segments_;
};

} // namespace discflow
