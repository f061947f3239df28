#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "discflow/mollifier.hpp"
#include "discflow/radial_profile.hpp"
#include "discflow/types.hpp"

namespace discflow {

enum class HamiltonianKind {
    RotationFamily,
    RadialPoly,
    RadialStaircase,
    PerturbedRadial,
    Mollified,
};

/// One perturbation term: amplitude * (1 - s) * r^l * cos(l*theta + 2*pi*m*t + phase),
/// a harmonic polynomial in z times the radial envelope (1 - s), so the term
/// is smooth at the origin and vanishes on the boundary circle.
struct FourierTerm {
    double amplitude{0.0};
    int time_harmonic{0};     // m
    int angular_harmonic{0};  // l >= 0
    double phase{0.0};
};

/// Immutable parametric Hamiltonian family on the plane, 1-periodic in time.
/// All kinds except Mollified vanish identically on the boundary circle and
/// extend beyond the disc by their defining formula.
class Hamiltonian {
public:
    static Hamiltonian rotation(double rho);
    static Hamiltonian radial_poly(std::vector<double> coeffs);
    static Hamiltonian staircase(double lambda, double eps, double bump_height,
                                 int twist = 0);
    static Hamiltonian perturbed(std::vector<double> base_coeffs,
                                 std::vector<FourierTerm> terms);
    static Hamiltonian zero() { return radial_poly({0.0}); }

    HamiltonianKind kind() const { return kind_; }
    bool is_radial() const;
    bool is_autonomous() const;

    double value(double t, const Vec2& z) const;
    Vec2 gradient(double t, const Vec2& z) const;
    Hess2 hessian(double t, const Vec2& z) const;
    /// X_H = (dH/dy, -dH/dx), the field with i_X omega = dH for omega = dx^dy.
    Vec2 vector_field(double t, const Vec2& z) const {
        const Vec2 g = gradient(t, z);
        return {g.y, -g.x};
    }

    /// Radial profile g with H(z) = g(|z|^2); valid for the radial kinds.
    const RadialProfile& profile() const;
    std::shared_ptr<const RadialProfile> profile_ptr() const;

    // Parameter accessors (valid for the matching kind).
    double rotation_rho() const;
    const std::vector<double>& poly_coeffs() const;
    double staircase_lambda() const;
    double staircase_eps() const;
    double staircase_bump_height() const;
    int staircase_twist() const;
    const std::vector<double>& perturbed_base_coeffs() const;
    const std::vector<FourierTerm>& perturbed_terms() const;
    const Hamiltonian& mollified_base() const;
    int mollified_n() const;
    bool mollified_refined() const;
    const CollarMap& mollified_collar() const;

    friend Hamiltonian build_mollified(const Hamiltonian& base, int n, bool refined);

private:
    struct RotationData {
        double rho;
        std::shared_ptr<const PolyProfile> prof;
    };
    struct PolyData {
        std::shared_ptr<const PolyProfile> prof;
    };
    struct StairData {
        std::shared_ptr<const StaircaseProfile> prof;
    };
    struct PerturbedData {
        std::shared_ptr<const PolyProfile> base;
        std::vector<FourierTerm> terms;
    };
    struct MollifiedData {
        std::shared_ptr<const Hamiltonian> base;
        std::shared_ptr<const CollarMap> collar;
        bool refined;
    };

    using Data = std::variant<RotationData, PolyData, StairData, PerturbedData,
                              MollifiedData>;

    Hamiltonian(HamiltonianKind kind, Data data)
        : kind_(kind), data_(std::move(data)) {}

    HamiltonianKind kind_;
    Data data_;
};

/// Hamiltonian of the isotopy rotated k full turns backwards:
/// K(z) + H(t, R_{2 pi k t} z) with K the radial profile -pi*k*(1-s).
/// Supported for the formula families; throws for Mollified.
Hamiltonian precompose_rotation(const Hamiltonian& H, int k);

/// Compactly supported approximation H_n(t, 1+r, theta) = H(t, 1+rho_n(r), theta),
/// equal to the base on the disc and supported in |z| <= 1 + 1/n.
/// Throws BoundaryViolationError when the base does not vanish on the circle.
Hamiltonian build_mollified(const Hamiltonian& base, int n, bool refined);

/// Identical call surface as the staircase constructor; named after the role
/// it plays in the spectral-gap argument.
inline Hamiltonian build_staircase(double lambda, double eps, double bump_height) {
    return Hamiltonian::staircase(lambda, eps, bump_height);
}

/// Pointwise sum of two radial Hamiltonians; the result is a radial
/// polynomial family (rotation profiles are folded into their coefficients).
Hamiltonian add_radial(const Hamiltonian& a, const Hamiltonian& b);

struct HoferRegion {
    enum class Type { Disc, Plane, Annulus };
    Type type{Type::Disc};
    int annulus_n{1};

    static HoferRegion disc() { return {Type::Disc, 1}; }
    static HoferRegion plane() { return {Type::Plane, 1}; }
    static HoferRegion annulus(int n) { return {Type::Annulus, n}; }
};

/// Hofer norm: the time integral of max_E H(t,.) - min_E H(t,.).
double hofer_norm(const Hamiltonian& H, const HoferRegion& region,
                  int space_samples = 256, int time_samples = 64);

/// Sampled sup of |grad H_n| over the collar 1 <= |z| <= 1 + 1/n, refined
/// until doubling the grid changes the result by less than 1%.
double grad_bound_outside_disc(const Hamiltonian& mollified);

/// Sampled sup of |H_n| over the collar (sup-norm outside the disc).
double sup_norm_outside_disc(const Hamiltonian& mollified);

/// Max |H| over boundary samples and a period of time samples.
double max_on_boundary(const Hamiltonian& H, int space_samples = 256,
                       int time_samples = 16);

} // namespace discflow
