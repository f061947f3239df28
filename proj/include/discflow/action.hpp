#pragma once

#include <functional>
#include <vector>

#include "discflow/flow.hpp"
#include "discflow/hamiltonian.hpp"

namespace discflow {

enum class ActionRoute { PathIntegral, BoundaryAnchored };

struct ActionSample {
    Vec2 point;
    double sigma{0.0};
    ActionRoute route{ActionRoute::PathIntegral};
};

/// Loop action A_H(x) = int x*lambda_0 + int_0^T H(t, x(t)) dt. The first
/// term is the enclosed area of the trace, the second a periodic trapezoid
/// along it. Throws NotClosedError unless the endpoints agree to `closed_tol`.
double action_of_loop(const Hamiltonian& H, const OrbitTrace& loop,
                      double closed_tol = 1e-6);

/// Action function sigma(z) by the path formula
///   sigma(z) = int_0^1 (lambda_0(X_{H^t}) + H^t)(phi_t(z)) dt,
/// which solves d sigma = phi^* lambda_0 - lambda_0 with the boundary-orbit
/// normalization. Boundary points use the boundary line integral directly.
ActionSample action_function(const Hamiltonian& H, const Vec2& z,
                             int steps_per_unit = 2000);

/// Max residual of |grad sigma - (phi^* lambda_0 - lambda_0)| over an
/// interior grid; grad sigma by centered differences of action_function.
double verify_sigma_pde(const Hamiltonian& H, int grid, int steps_per_unit = 2000);

enum class CalabiMethod { TimeSpace, SigmaAverage };

struct CalabiOptions {
    int radial_nodes{64};    // Gauss-Legendre in s
    int angular_nodes{128};  // uniform in theta
    int time_nodes{64};      // uniform in t (skipped for autonomous kinds)
    int steps_per_unit{2000};
};

/// Calabi invariant in raw omega = dx^dy units (disc area pi):
///   TimeSpace    = int_0^1 int_D H omega dt
///   SigmaAverage = int_D sigma omega
/// The two differ by the boundary normalization of sigma; harness reports
/// both. Throws BoundaryViolationError unless H vanishes on the circle.
double calabi(const Hamiltonian& H, CalabiMethod method, const CalabiOptions& opts = {});

struct PointShift {
    Vec2 point;
    double delta_sigma;   // sigma_{lambda_0 + df} - sigma_{lambda_0}
    double f_transport;   // f(phi(z)) - f(z)
    bool fixed_point;
    double deviation;     // |delta - transport|, or |delta| at fixed points
};

struct PrimitiveShiftReport {
    std::vector<PointShift> rows;
    double max_fixed_deviation{0.0};
    double max_nonfixed_deviation{0.0};
};

/// Recomputes sigma with the primitive lambda_0 + df and reports the change:
/// f o phi - f at non-fixed points, zero at fixed points.
PrimitiveShiftReport primitive_shift_test(
    const Hamiltonian& H, const std::function<double(Vec2)>& f,
    const std::function<Vec2(Vec2)>& grad_f, const std::vector<Vec2>& points,
    double fixed_tol = 1e-8, int steps_per_unit = 2000);

} // namespace discflow
