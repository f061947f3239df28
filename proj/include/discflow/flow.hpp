#pragma once

#include <optional>
#include <vector>

#include "discflow/hamiltonian.hpp"
#include "discflow/types.hpp"

namespace discflow {

struct FlowOptions {
    int steps_per_unit{2000};
    bool with_jacobian{false};
    double escape_radius{3.0};
    double t0{0.0};
};

/// Endpoint data of a flow integration: position, accumulated action
/// integrand int (lambda_0(xdot) + H) dt, and optionally the linearization.
struct FlowPoint {
    Vec2 z;
    double action{0.0};
    Mat2 jac{Mat2::identity()};
};

/// Time-sampled trajectory of the Hamiltonian flow.
struct OrbitTrace {
    std::vector<double> times;
    std::vector<Vec2> points;
    std::vector<double> action;      // accumulated integrand, action[0] = 0
    std::vector<double> angle_lift;  // continuous theta(t); empty near origin
    bool has_angle_lift{false};

    double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
    bool closed(double tol = 1e-6) const {
        return !points.empty() && (points.back() - points.front()).norm() <= tol;
    }
};

/// Integrates the flow of X_H from z0 over [t0, t0 + T] with classical RK4.
/// Throws StepRejectionError if the orbit escapes |z| > escape_radius.
FlowPoint flow_map(const Hamiltonian& H, const Vec2& z0, double T,
                   const FlowOptions& opts = {});

/// Full trace with `steps` samples after the initial one. Requires
/// steps >= 100 * T (and at least 8).
OrbitTrace integrate_orbit(const Hamiltonian& H, const Vec2& z0, double T, int steps);

inline OrbitTrace integrate_orbit(const Hamiltonian& H, const Vec2& z0, double T) {
    const int steps = std::max(8, static_cast<int>(2000 * std::max(1.0, T)));
    return integrate_orbit(H, z0, T, steps);
}

Vec2 time_one_map(const Hamiltonian& H, const Vec2& z0, int steps_per_unit = 2000);

Mat2 flow_jacobian(const Hamiltonian& H, const Vec2& z0, double T,
                   int steps_per_unit = 2000);

/// Distance between the endpoints computed at h and h/2; a Richardson-style
/// gate on the reported integration tolerance.
double flow_richardson_error(const Hamiltonian& H, const Vec2& z0, double T,
                             int steps_per_unit = 2000);

/// Boundary circle dynamics: integrates the lift of
/// thetadot = d theta[X_{H^t}] = -dH/dr on |z| = 1 over [0, T], returning the
/// final lifted angle.
double boundary_angle_lift(const Hamiltonian& H, double theta0, double T,
                           int steps_per_unit = 256);

} // namespace discflow
