#include "discflow/flow.hpp"

#include <cmath>

#include "discflow/errors.hpp"
#include "discflow/geometry.hpp"

namespace discflow {
namespace {

struct State {
    Vec2 z;
    double action;
    Mat2 jac;
};

struct Deriv {
    Vec2 dz;
    double da;
    Mat2 dj;
};

Deriv rhs(const Hamiltonian& H, double t, const State& s, bool with_jac) {
    Deriv d;
    const Vec2 grad = H.gradient(t, s.z);
    d.dz = {grad.y, -grad.x};
    d.da = liouville_pairing(s.z, d.dz) + H.value(t, s.z);
    if (with_jac) {
        const Hess2 h = H.hessian(t, s.z);
        // Linearization of X_H = (H_y, -H_x).
        const Mat2 J{h.xy, h.yy, -h.xx, -h.xy};
        d.dj = J * s.jac;
    }
    return d;
}

State axpy(const State& s, const Deriv& d, double c, bool with_jac) {
    State out;
    out.z = s.z + d.dz * c;
    out.action = s.action + d.da * c;
    out.jac = with_jac ? s.jac + d.dj * c : s.jac;
    return out;
}

// One classical RK4 step from (t, s) with step h.
State rk4_step(const Hamiltonian& H, double t, const State& s, double h, bool wj) {
    const Deriv k1 = rhs(H, t, s, wj);
    const Deriv k2 = rhs(H, t + 0.5 * h, axpy(s, k1, 0.5 * h, wj), wj);
    const Deriv k3 = rhs(H, t + 0.5 * h, axpy(s, k2, 0.5 * h, wj), wj);
    const Deriv k4 = rhs(H, t + h, axpy(s, k3, h, wj), wj);
    State out;
    const double c = h / 6.0;
    out.z = s.z + (k1.dz + (k2.dz + k3.dz) * 2.0 + k4.dz) * c;
    out.action = s.action + (k1.da + 2.0 * (k2.da + k3.da) + k4.da) * c;
    if (wj) {
        out.jac = s.jac + (k1.dj + (k2.dj + k3.dj) * 2.0 + k4.dj) * c;
    } else {
        out.jac = s.jac;
    }
    return out;
}

} // namespace

FlowPoint flow_map(const Hamiltonian& H, const Vec2& z0, double T,
                   const FlowOptions& opts) {
    const int steps = std::max(1, static_cast<int>(std::ceil(opts.steps_per_unit * std::fabs(T))));
    const double h = T / steps;
    State s{z0, 0.0, Mat2::identity()};
    const double esc2 = opts.escape_radius * opts.escape_radius;
    for (int i = 0; i < steps; ++i) {
        s = rk4_step(H, opts.t0 + i * h, s, h, opts.with_jacobian);
        if (s.z.norm2() > esc2) {
            throw StepRejectionError("orbit escaped the working region");
        }
    }
    return {s.z, s.action, s.jac};
}

OrbitTrace integrate_orbit(const Hamiltonian& H, const Vec2& z0, double T, int steps) {
    if (steps < std::max(8.0, 100.0 * T)) {
        throw Error("integrate_orbit: need steps >= 100*T");
    }
    OrbitTrace trace;
    trace.times.reserve(steps + 1);
    trace.points.reserve(steps + 1);
    trace.action.reserve(steps + 1);
    const double h = T / steps;
    State s{z0, 0.0, Mat2::identity()};
    trace.times.push_back(0.0);
    trace.points.push_back(s.z);
    trace.action.push_back(0.0);
    for (int i = 0; i < steps; ++i) {
        s = rk4_step(H, i * h, s, h, false);
        if (s.z.norm2() > 9.0) {
            throw StepRejectionError("orbit escaped the working region");
        }
        trace.times.push_back((i + 1) * h);
        trace.points.push_back(s.z);
        trace.action.push_back(s.action);
    }
    // Angle lift, defined when the trace stays away from the origin.
    double min_r = trace.points.front().norm();
    for (const auto& p : trace.points) min_r = std::min(min_r, p.norm());
    if (min_r > 1e-9) {
        trace.angle_lift.resize(trace.points.size());
        trace.angle_lift[0] = trace.points[0].angle();
        bool ok = true;
        for (std::size_t i = 1; i < trace.points.size(); ++i) {
            const Vec2& a = trace.points[i - 1];
            const Vec2& b = trace.points[i];
            const double dth = std::atan2(a.cross(b), a.dot(b));
            if (std::fabs(dth) > 0.5 * kPi) {
                ok = false;
                break;
            }
            trace.angle_lift[i] = trace.angle_lift[i - 1] + dth;
        }
        trace.has_angle_lift = ok;
        if (!ok) trace.angle_lift.clear();
    }
    return trace;
}

Vec2 time_one_map(const Hamiltonian& H, const Vec2& z0, int steps_per_unit) {
    FlowOptions opts;
    opts.steps_per_unit = steps_per_unit;
    return flow_map(H, z0, 1.0, opts).z;
}

Mat2 flow_jacobian(const Hamiltonian& H, const Vec2& z0, double T, int steps_per_unit) {
    FlowOptions opts;
    opts.steps_per_unit = steps_per_unit;
    opts.with_jacobian = true;
    return flow_map(H, z0, T, opts).jac;
}

double flow_richardson_error(const Hamiltonian& H, const Vec2& z0, double T,
                             int steps_per_unit) {
    FlowOptions coarse, fine;
    coarse.steps_per_unit = steps_per_unit;
    fine.steps_per_unit = 2 * steps_per_unit;
    const Vec2 a = flow_map(H, z0, T, coarse).z;
    const Vec2 b = flow_map(H, z0, T, fine).z;
    return (a - b).norm();
}

double boundary_angle_lift(const Hamiltonian& H, double theta0, double T,
                           int steps_per_unit) {
    // thetadot(t, theta) = -dH/dr at (cos theta, sin theta); the radial
    // derivative is grad H . z on the unit circle.
    auto f = [&H](double t, double th) {
        const Vec2 z{std::cos(th), std::sin(th)};
        return -H.gradient(t, z).dot(z);
    };
    const int steps = std::max(1, static_cast<int>(std::ceil(steps_per_unit * std::fabs(T))));
    const double h = T / steps;
    double th = theta0;
    for (int i = 0; i < steps; ++i) {
        const double t = i * h;
        const double k1 = f(t, th);
        const double k2 = f(t + 0.5 * h, th + 0.5 * h * k1);
        const double k3 = f(t + 0.5 * h, th + 0.5 * h * k2);
        const double k4 = f(t + h, th + h * k3);
        th += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
    }
    return th;
}

} // namespace discflow
