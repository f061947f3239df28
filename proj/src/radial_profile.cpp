#include "discflow/radial_profile.hpp"

#include <cmath>

#include "discflow/errors.hpp"
#include "discflow/smooth.hpp"
#include "discflow/types.hpp"

namespace discflow {

PolyProfile::PolyProfile(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    double at_one = 0.0;
    for (double c : coeffs_) at_one += c;
    coeffs_[0] -= at_one;  // project onto g(1) = 0
}

double PolyProfile::g(double s) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * s + coeffs_[i];
    return v;
}

double PolyProfile::dg(double s) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) v = v * s + coeffs_[i] * static_cast<double>(i);
    return v;
}

double PolyProfile::d2g(double s) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 2;) {
        v = v * s + coeffs_[i] * static_cast<double>(i) * static_cast<double>(i - 1);
    }
    return v;
}

bool PolyProfile::is_zero(double tol) const {
    for (double c : coeffs_) {
        if (std::fabs(c) > tol) return false;
    }
    return true;
}

bool PolyProfile::is_linear(double tol) const {
    for (std::size_t i = 2; i < coeffs_.size(); ++i) {
        if (std::fabs(coeffs_[i]) > tol) return false;
    }
    return true;
}

StaircaseProfile::StaircaseProfile(double lambda, double eps, double bump_height,
                                   int twist)
    : lambda_(lambda), eps_(eps), bump_height_(bump_height), twist_(twist) {
    if (!(eps > 0.0 && eps < 0.25)) {
        throw InvalidShapeError("staircase: need 0 < eps < 1/4");
    }
    if (!(lambda <= 0.0)) {
        throw InvalidShapeError("staircase: need lambda <= 0");
    }
    if (!(bump_height > 0.0)) {
        throw InvalidShapeError("staircase: need a positive bump height");
    }
    rise_start_ = 1.0 - 2.0 * eps;
    rise_width_ = eps * (7.0 / 8.0);  // flat-zero window of width eps/8 before 1-eps
    bump_center_ = 1.0 - 0.5 * eps;
    bump_halfwidth_ = 0.375 * eps;    // support [1-eps+eps/8, 1-eps/8]
    const double margin = eps / 8.0;
    if (bump_lo() <= (1.0 - eps) + 0.5 * margin || bump_hi() >= 1.0 - 0.5 * margin) {
        throw InvalidShapeError("staircase: bump support touches {1-eps, 1}");
    }
}

double StaircaseProfile::g(double s) const {
    const double rise = lambda_ * (1.0 - smooth_step((s - rise_start_) / rise_width_));
    const double u = (s - bump_center_) / bump_halfwidth_;
    const double bump = bump_height_ * unit_bump(u);
    const double tw = -kPi * twist_ * (1.0 - s);
    return rise + bump + tw;
}

double StaircaseProfile::dg(double s) const {
    const double rise = -lambda_ * smooth_step_d1((s - rise_start_) / rise_width_) / rise_width_;
    const double u = (s - bump_center_) / bump_halfwidth_;
    const double bump = bump_height_ * unit_bump_d1(u) / bump_halfwidth_;
    return rise + bump + kPi * twist_;
}

double StaircaseProfile::d2g(double s) const {
    const double rise =
        -lambda_ * smooth_step_d2((s - rise_start_) / rise_width_) / (rise_width_ * rise_width_);
    const double u = (s - bump_center_) / bump_halfwidth_;
    const double bump = bump_height_ * unit_bump_d2(u) / (bump_halfwidth_ * bump_halfwidth_);
    return rise + bump;
}

} // namespace discflow
