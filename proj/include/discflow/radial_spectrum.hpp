#pragma once

#include <string>
#include <vector>

#include "discflow/hamiltonian.hpp"
#include "discflow/radial_profile.hpp"

namespace discflow {

/// Root set of dg(s) = target on [0, 1]: isolated roots and plateaus where
/// the equation holds identically on a subinterval.
struct SlopeRoot {
    double s;           // root, or plateau midpoint
    bool plateau{false};
    double plateau_lo{0.0}, plateau_hi{0.0};
};

/// Guarded root isolation for dg(s) = target: grid sampling, plateau
/// detection, bisection of sign changes, Newton polish. Throws
/// RootIsolationFailureError if the grid shows more than 10^4 sign changes.
std::vector<SlopeRoot> solve_slope_equal(const RadialProfile& g, double target,
                                         int grid = 10000);

/// One spectral level: a circle where the profile slope is an integer
/// multiple of pi (1-periodic orbits, thetadot = -2 g'(s)), with the action
/// given by the y-intercept of the tangent line, g(s) - s g'(s).
struct TangentLevel {
    double s;
    int slope_index;  // k with g'(s) = -pi * k
    double value;     // g(s) - s g'(s)
    bool plateau{false};
};

struct TangentSpectrum {
    std::vector<TangentLevel> levels;     // sorted ascending by value
    double origin_value{0.0};             // g(0), the origin fixed point
    std::vector<double> boundary_values;  // nonempty iff g'(1) in pi*Z

    /// All spectral values: levels, origin, boundary; sorted, deduplicated.
    std::vector<double> all_values(double dedup_tol = 1e-9) const;
};

TangentSpectrum tangent_spectrum(const RadialProfile& g, int slope_range,
                                 int grid = 10000);

struct GapCertificate {
    std::vector<double> nonneg_values;  // spectral values >= 0
    bool gap_holds{false};              // every positive value >= M - 1e-6
    double min_positive{0.0};
    double bump_height{0.0};
};

/// Checks that the nonnegative spectrum of the staircase family lies in
/// {0} u [M, inf): the spectrum-side half of the spectral-gap argument.
GapCertificate staircase_gap_certificate(double lambda, double eps, double bump_height);

struct RotationInvariants {
    double c_plus;
    double c_minus;
    std::vector<std::string> derivation;
};

/// Closed-form extended spectral invariants of the rigid rotation family:
/// c+ = clamp(pi rho, 0, pi), c- = clamp(pi rho, -pi, 0), with the derivation
/// chain (membership + sign forcing + duality) recorded in the output.
RotationInvariants rotation_spectral_invariants(double rho);

/// clamp(pi(r1+r2), 0, pi) <= clamp(pi r1, 0, pi) + clamp(pi r2, 0, pi).
bool subadditivity_check_rotations(double rho1, double rho2);

enum class MonotonicityStatus { Consistent, Inconsistent, Indeterminate };

struct MonotonicityReport {
    MonotonicityStatus status{MonotonicityStatus::Indeterminate};
    bool hypothesis_ok{false};  // g1 >= g2 pointwise (sampled)
    double c1_lo{0.0}, c1_hi{0.0};
    double c2_lo{0.0}, c2_hi{0.0};
    std::string bound_g1, bound_g2;
};

/// For profile pairs whose c+ is pinned by closed-form logic (rotations,
/// staircases via the gap certificate, the zero family), verifies the
/// ordering c+(g1) >= c+(g2) implied by pointwise monotonicity. Pairs where
/// neither side is pinned are reported Indeterminate, not guessed.
MonotonicityReport monotonicity_check_radial(const Hamiltonian& g1,
                                             const Hamiltonian& g2);

} // namespace discflow
