#include "discflow/mollifier.hpp"

#include <cmath>
#include <stdexcept>

#include "discflow/smooth.hpp"

namespace discflow {
namespace {

constexpr double kBlendEnd = 0.25;  // base profile matches r*exp(...) beyond this

const QuadratureRule& gl7() {
    static const QuadratureRule rule = gauss_legendre(7);
    return rule;
}

} // namespace

double CollarMap::base_value(double r) {
    if (r <= 0.0) return r;
    if (r >= 1.0) return 0.0;
    const double den = 1.0 - r;
    const double w = (r * r) / (den * den);
    const double expo = w * smooth_step(r / kBlendEnd);
    if (expo > 700.0) return 0.0;
    return r * std::exp(-expo);
}

double CollarMap::base_slope(double r) {
    if (r < 0.0) return 1.0;
    if (r >= 1.0) return 0.0;
    const double den = 1.0 - r;
    const double w = (r * r) / (den * den);
    const double wp = 2.0 * r / (den * den * den);
    const double t = smooth_step(r / kBlendEnd);
    const double tp = smooth_step_d1(r / kBlendEnd) / kBlendEnd;
    const double expo = w * t;
    if (expo > 700.0) return 0.0;
    const double expo_p = wp * t + w * tp;
    return std::exp(-expo) * (1.0 - r * expo_p);
}

CollarMap::CollarMap(int n, bool refined) : n_(n), refined_(refined) {
    if (n < 1) throw std::invalid_argument("CollarMap: n >= 1 required");
    if (!refined_) return;

    rise_end_ = 0.5 / n;
    edge_ = 0.125;

    // Slope field before the descent magnitude is fixed:
    //   rise(x) = 1 - step(x / a)           supported on [0, a]
    //   shoulder bump = step((x-a)/edge) * step((1-x)/edge), plateau at 1
    const double a = rise_end_;
    const double w = edge_;

    auto rise = [a](double x) { return 1.0 - smooth_step(x / a); };
    auto bump = [a, w](double x) {
        return smooth_step((x - a) / w) * smooth_step((1.0 - x) / w);
    };

    segments_.clear();
    Segment s1{0.0, a, 256, {}};
    Segment s2{a, a + w, 128, {}};
    Segment s3{a + w, 1.0 - w, 1, {}};  // plateau: rise = 0, bump = 1 exactly
    Segment s4{1.0 - w, 1.0, 128, {}};

    auto tabulate = [](Segment& seg, auto&& f) {
        seg.cum.assign(seg.panels + 1, 0.0);
        const double h = (seg.hi - seg.lo) / seg.panels;
        for (int i = 0; i < seg.panels; ++i) {
            const double x0 = seg.lo + i * h;
            seg.cum[i + 1] = seg.cum[i] + integrate_gl(f, x0, x0 + h, gl7());
        }
    };
    tabulate(s1, rise);
    tabulate(s2, bump);
    tabulate(s4, bump);

    const double rise_mass = s1.cum.back();
    const double bump_mass = s2.cum.back() + (s3.hi - s3.lo) + s4.cum.back();
    descent_ = rise_mass / bump_mass;  // exact zero at x = 1 for the discrete integral

    // Convert stored integrals into cumulative values of rho-tilde.
    double base = 0.0;
    for (double& c : s1.cum) c += base;
    base = s1.cum.back();
    for (double& c : s2.cum) { c = base - descent_ * c; }
    base = s2.cum.back();
    s3.cum = {base, base - descent_ * (s3.hi - s3.lo)};
    base = s3.cum.back();
    for (double& c : s4.cum) { c = base - descent_ * c; }

    segments_ = {s1, s2, s3, s4};
}

double CollarMap::tilde_slope(double x) const {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    const double a = rise_end_;
    const double w = edge_;
    const double rise = 1.0 - smooth_step(x / a);
    const double bump = smooth_step((x - a) / w) * smooth_step((1.0 - x) / w);
    return rise - descent_ * bump;
}

double CollarMap::tilde_value(double x) const {
    if (x <= 0.0) return x;
    if (x >= 1.0) return 0.0;
    for (std::size_t sidx = 0; sidx < segments_.size(); ++sidx) {
        const Segment& seg = segments_[sidx];
        if (x > seg.hi) continue;
        if (sidx == 2) {  // plateau: slope is exactly -descent_
            return seg.cum[0] - descent_ * (x - seg.lo);
        }
        const double h = (seg.hi - seg.lo) / seg.panels;
        int i = static_cast<int>((x - seg.lo) / h);
        if (i >= seg.panels) i = seg.panels - 1;
        const double x0 = seg.lo + i * h;
        // cum holds rho-tilde at panel edges; add the slope-field integral
        // over the remaining [x0, x].
        const double tail =
            integrate_gl([this](double u) { return tilde_slope(u); }, x0, x, gl7());
        return seg.cum[i] + tail;
    }
    return 0.0;
}

double CollarMap::value(double r) const {
    if (r <= 0.0) return r;
    if (r >= support_width()) return 0.0;
    if (!refined_) return base_value(n_ * r) / n_;
    return tilde_value(n_ * r) / n_;
}

double CollarMap::slope(double r) const {
    if (r < 0.0) return 1.0;
    if (r >= support_width()) return 0.0;
    if (!refined_) return base_slope(n_ * r);
    return tilde_slope(n_ * r);
}

} // namespace discflow
