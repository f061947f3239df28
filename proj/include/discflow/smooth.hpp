#pragma once

#include <vector>

namespace discflow {

/// Canonical C-infinity step: 0 for x <= 0, 1 for x >= 1, strictly
/// increasing in between. Built from exp(-1/x) so all derivatives vanish at
/// the endpoints. Writing phi(x) = 1/x - 1/(1-x), the step is the logistic
/// sigmoid of -phi, which gives stable closed forms for the derivatives.
double smooth_step(double x);
double smooth_step_d1(double x);
double smooth_step_d2(double x);

/// Unimodal C-infinity bump on (-1, 1): exp(-u^2/(1-u^2)), max 1 at u = 0,
/// no other critical points in the open support, flat zero at u = +-1.
double unit_bump(double u);
double unit_bump_d1(double u);
double unit_bump_d2(double u);

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
template <typename F>
double integrate_gl(F&& f, double a, double b, const QuadratureRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        total += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return total * half;
}

} // namespace discflow
