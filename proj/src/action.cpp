#include "discflow/action.hpp"

#include <cmath>

#include "discflow/errors.hpp"
#include "discflow/geometry.hpp"
#include "discflow/smooth.hpp"

namespace discflow {

double action_of_loop(const Hamiltonian& H, const OrbitTrace& loop, double closed_tol) {
    if (!loop.closed(closed_tol)) {
        throw NotClosedError("action_of_loop: trace endpoints do not match");
    }
    const std::size_t n = loop.points.size() - 1;  // last sample repeats the first
    const double h = loop.duration() / n;
    Loop poly(std::vector<Vec2>(loop.points.begin(), loop.points.end() - 1));
    long double ham = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        ham += H.value(loop.times[i], loop.points[i]);
    }
    return enclosed_area(poly) + static_cast<double>(ham) * h;
}

ActionSample action_function(const Hamiltonian& H, const Vec2& z, int steps_per_unit) {
    const double r = z.norm();
    if (r > 1.0 + 1e-9) {
        throw OutsideDiscError("action_function: point outside the closed disc");
    }
    if (std::fabs(r - 1.0) <= 1e-12) {
        // Boundary orbits stay on the circle where H = 0 and
        // lambda_0 = d(theta)/2, so sigma is half the lifted angle change.
        const double th0 = z.angle();
        const double th1 = boundary_angle_lift(H, th0, 1.0, 4096);
        return {z, 0.5 * (th1 - th0), ActionRoute::BoundaryAnchored};
    }
    FlowOptions opts;
    opts.steps_per_unit = steps_per_unit;
    return {z, flow_map(H, z, 1.0, opts).action, ActionRoute::PathIntegral};
}

double verify_sigma_pde(const Hamiltonian& H, int grid, int steps_per_unit) {
    const double fd = 1e-3;
    double worst = 0.0;
    FlowOptions jac_opts;
    jac_opts.steps_per_unit = steps_per_unit;
    jac_opts.with_jacobian = true;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const Vec2 z{-0.9 + 1.8 * i / (grid - 1.0), -0.9 + 1.8 * j / (grid - 1.0)};
            if (z.norm() > 0.9) continue;
            auto sigma = [&](const Vec2& p) {
                return action_function(H, p, steps_per_unit).sigma;
            };
            const double dsx = (sigma({z.x + fd, z.y}) - sigma({z.x - fd, z.y})) / (2.0 * fd);
            const double dsy = (sigma({z.x, z.y + fd}) - sigma({z.x, z.y - fd})) / (2.0 * fd);
            const FlowPoint fp = flow_map(H, z, 1.0, jac_opts);
            // Components of phi^* lambda_0 - lambda_0 on the basis vectors.
            auto pullback = [&](const Vec2& v) {
                return liouville_pairing(fp.z, fp.jac * v);
            };
            const double rx = pullback({1.0, 0.0}) - (-0.5 * z.y);
            const double ry = pullback({0.0, 1.0}) - (0.5 * z.x);
            worst = std::max(worst, std::fabs(dsx - rx));
            worst = std::max(worst, std::fabs(dsy - ry));
        }
    }
    return worst;
}

double calabi(const Hamiltonian& H, CalabiMethod method, const CalabiOptions& opts) {
    if (max_on_boundary(H) > 1e-10) {
        throw BoundaryViolationError("calabi: H does not vanish on the boundary");
    }
    const QuadratureRule gl = gauss_legendre(opts.radial_nodes);
    const int na = opts.angular_nodes;
    const int nt = (method == CalabiMethod::TimeSpace && !H.is_autonomous())
                       ? opts.time_nodes
                       : 1;
    // int_D f omega = 1/2 int_0^{2 pi} int_0^1 f(s, theta) ds dtheta.
    long double total = 0.0L;
    for (int is = 0; is < opts.radial_nodes; ++is) {
        const double s = 0.5 * (gl.nodes[is] + 1.0);
        const double ws = 0.5 * gl.weights[is];
        const double r = std::sqrt(s);
        long double ring = 0.0L;
        for (int ia = 0; ia < na; ++ia) {
            const double th = 2.0 * kPi * ia / na;
            const Vec2 z{r * std::cos(th), r * std::sin(th)};
            if (method == CalabiMethod::TimeSpace) {
                long double avg = 0.0L;
                for (int it = 0; it < nt; ++it) {
                    avg += H.value(static_cast<double>(it) / nt, z);
                }
                ring += avg / nt;
            } else {
                ring += action_function(H, z, opts.steps_per_unit).sigma;
            }
        }
        total += ws * ring * (2.0 * kPi / na);
    }
    return 0.5 * static_cast<double>(total);
}

PrimitiveShiftReport primitive_shift_test(
    const Hamiltonian& H, const std::function<double(Vec2)>& f,
    const std::function<Vec2(Vec2)>& grad_f, const std::vector<Vec2>& points,
    double fixed_tol, int steps_per_unit) {
    PrimitiveShiftReport report;
    for (const Vec2& z : points) {
        const int steps = steps_per_unit;
        OrbitTrace trace = integrate_orbit(H, z, 1.0, steps);
        // delta sigma = int_0^1 df(X_H) dt along the orbit; trapezoid with
        // exact velocities from the vector field.
        long double delta = 0.0L;
        const double h = 1.0 / steps;
        for (int i = 0; i <= steps; ++i) {
            const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
            const Vec2 v = H.vector_field(trace.times[i], trace.points[i]);
            delta += w * grad_f(trace.points[i]).dot(v);
        }
        PointShift row;
        row.point = z;
        row.delta_sigma = static_cast<double>(delta) * h;
        row.f_transport = f(trace.points.back()) - f(z);
        row.fixed_point = (trace.points.back() - z).norm() <= fixed_tol;
        row.deviation = row.fixed_point
                            ? std::fabs(row.delta_sigma)
                            : std::fabs(row.delta_sigma - row.f_transport);
        if (row.fixed_point) {
            report.max_fixed_deviation = std::max(report.max_fixed_deviation, row.deviation);
        } else {
            report.max_nonfixed_deviation =
                std::max(report.max_nonfixed_deviation, row.deviation);
        }
        report.rows.push_back(row);
    }
    return report;
}

} // namespace discflow
