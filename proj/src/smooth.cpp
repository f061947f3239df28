#include "discflow/smooth.hpp"

#include <cmath>
#include <stdexcept>

#include "discflow/types.hpp"

namespace discflow {
namespace {

// phi(x) = 1/x - 1/(1-x) maps (0,1) onto R, decreasing.
inline double phi(double x) { return 1.0 / x - 1.0 / (1.0 - x); }
inline double phi_d1(double x) {
    const double a = 1.0 / x, b = 1.0 / (1.0 - x);
    return -a * a - b * b;
}
inline double phi_d2(double x) {
    const double a = 1.0 / x, b = 1.0 / (1.0 - x);
    return 2.0 * a * a * a - 2.0 * b * b * b;
}

// Logistic of -phi and its first two x-derivatives; T = 1/(1 + e^{phi}).
struct StepEval {
    double value, d1, d2;
};

StepEval step_eval(double x) {
    if (x <= 0.0) return {0.0, 0.0, 0.0};
    if (x >= 1.0) return {1.0, 0.0, 0.0};
    const double p = phi(x);
    double t;  // T(x)
    if (p > 0.0) {
        const double e = std::exp(-p);
        t = e / (1.0 + e);
    } else {
        t = 1.0 / (1.0 + std::exp(p));
    }
    const double t1mt = t * (1.0 - t);
    const double p1 = phi_d1(x);
    const double p2 = phi_d2(x);
    const double d1 = -p1 * t1mt;
    const double d2 = -p2 * t1mt - p1 * d1 * (1.0 - 2.0 * t);
    return {t, d1, d2};
}

} // namespace

double smooth_step(double x) { return step_eval(x).value; }
double smooth_step_d1(double x) { return step_eval(x).d1; }
double smooth_step_d2(double x) { return step_eval(x).d2; }

double unit_bump(double u) {
    if (std::fabs(u) >= 1.0) return 0.0;
    const double u2 = u * u;
    return std::exp(-u2 / (1.0 - u2));
}

double unit_bump_d1(double u) {
    if (std::fabs(u) >= 1.0) return 0.0;
    const double u2 = u * u;
    const double den = 1.0 - u2;
    const double w1 = 2.0 * u / (den * den);
    return -w1 * unit_bump(u);
}

double unit_bump_d2(double u) {
    if (std::fabs(u) >= 1.0) return 0.0;
    const double u2 = u * u;
    const double den = 1.0 - u2;
    const double w1 = 2.0 * u / (den * den);
    const double w2 = (2.0 + 6.0 * u2) / (den * den * den);
    return (w1 * w1 - w2) * unit_bump(u);
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on Legendre polynomials from the Chebyshev guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace discflow
