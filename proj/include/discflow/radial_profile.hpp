#pragma once

#include <memory>
#include <vector>

namespace discflow {

/// Radial profile g of a rotationally symmetric Hamiltonian H(z) = g(s),
/// s = |z|^2. Profiles are smooth on [0, inf) and vanish at s = 1.
class RadialProfile {
public:
    virtual ~RadialProfile() = default;
    virtual double g(double s) const = 0;
    virtual double dg(double s) const = 0;
    virtual double d2g(double s) const = 0;
};

/// Polynomial profile g(s) = sum_i coeffs[i] * s^i. The constructor projects
/// the coefficients onto the affine constraint g(1) = 0 by adjusting the
/// constant term.
class PolyProfile final : public RadialProfile {
public:
    explicit PolyProfile(std::vector<double> coeffs);

    double g(double s) const override;
    double dg(double s) const override;
    double d2g(double s) const override;

    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero(double tol = 0.0) const;
    /// True when g is affine in s (the rigid-rotation shape pi*rho*(1-s)).
    bool is_linear(double tol = 1e-14) const;

private:
    std::vector<double> coeffs_;
};

/// Staircase profile from a plateau at lambda <= 0, a monotone rise to zero
/// before s = 1 - eps, and a single positive bump of height `bump_height`
/// supported strictly inside (1 - eps, 1). Corners are C-infinity blends.
/// `twist` adds -pi * twist * (1 - s) on top (a rigid rotation precomposition).
class StaircaseProfile final : public RadialProfile {
public:
    StaircaseProfile(double lambda, double eps, double bump_height, int twist = 0);

    double g(double s) const override;
    double dg(double s) const override;
    double d2g(double s) const override;

    double lambda() const { return lambda_; }
    double eps() const { return eps_; }
    double bump_height() const { return bump_height_; }
    int twist() const { return twist_; }

    /// Interval strictly containing the bump support.
    double bump_lo() const { return bump_center_ - bump_halfwidth_; }
    double bump_hi() const { return bump_center_ + bump_halfwidth_; }

private:
    double lambda_;
    double eps_;
    double bump_height_;
    int twist_;
    double rise_start_;      // 1 - 2*eps
    double rise_width_;      // rise ends at rise_start_ + rise_width_ < 1 - eps
    double bump_center_;     // 1 - eps/2
    double bump_halfwidth_;  // 3*eps/8, so support is [1-eps+eps/8, 1-eps/8]
};

/// Sum of two profiles (used for pointwise-sum diagnostics).
class SumProfile final : public RadialProfile {
public:
    SumProfile(std::shared_ptr<const RadialProfile> a,
               std::shared_ptr<const RadialProfile> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    double g(double s) const override { return a_->g(s) + b_->g(s); }
    double dg(double s) const override { return a_->dg(s) + b_->dg(s); }
    double d2g(double s) const override { return a_->d2g(s) + b_->d2g(s); }

private:
    std::shared_ptr<const RadialProfile> a_;
    std::shared_ptr<const RadialProfile> b_;
};

} // namespace discflow
