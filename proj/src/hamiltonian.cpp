#include "discflow/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "discflow/errors.hpp"

namespace discflow {
namespace {

using cplx = std::complex<double>;

// z^l and e^{i(2 pi m t + phase)} by repeated multiplication; l is small.
cplx ipow(const cplx& z, int l) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < l; ++i) r *= z;
    return r;
}

struct TermEval {
    double value;
    Vec2 grad;
    Hess2 hess;
};

TermEval eval_term(const FourierTerm& term, double t, const Vec2& z, bool want_hess) {
    TermEval out{0.0, {0.0, 0.0}, {0.0, 0.0, 0.0}};
    const int l = term.angular_harmonic;
    const double psi = 2.0 * kPi * term.time_harmonic * t + term.phase;
    const cplx rot(std::cos(psi), std::sin(psi));
    const cplx zc(z.x, z.y);

    const cplx p = ipow(zc, l) * rot;                                  // z^l e^{i psi}
    const cplx q = (l >= 1) ? double(l) * ipow(zc, l - 1) * rot : cplx(0.0);
    const double s = z.s();
    const double f = 1.0 - s;  // envelope
    const double A = term.amplitude;

    const double u = p.real();
    const double ux = q.real();
    const double uy = -q.imag();

    out.value = A * f * u;
    out.grad = {A * (-2.0 * z.x * u + f * ux), A * (-2.0 * z.y * u + f * uy)};
    if (want_hess) {
        const cplx r2 = (l >= 2) ? double(l) * double(l - 1) * ipow(zc, l - 2) * rot
                                 : cplx(0.0);
        const double uxx = r2.real();
        const double uxy = -r2.imag();
        const double uyy = -r2.real();
        out.hess.xx = A * (-2.0 * u - 4.0 * z.x * ux + f * uxx);
        out.hess.xy = A * (-2.0 * z.x * uy - 2.0 * z.y * ux + f * uxy);
        out.hess.yy = A * (-2.0 * u - 4.0 * z.y * uy + f * uyy);
    }
    return out;
}

Vec2 radial_gradient(const RadialProfile& prof, const Vec2& z) {
    const double d = prof.dg(z.s());
    return {2.0 * z.x * d, 2.0 * z.y * d};
}

Hess2 radial_hessian(const RadialProfile& prof, const Vec2& z) {
    const double s = z.s();
    const double d1 = prof.dg(s);
    const double d2 = prof.d2g(s);
    return {2.0 * d1 + 4.0 * z.x * z.x * d2, 4.0 * z.x * z.y * d2,
            2.0 * d1 + 4.0 * z.y * z.y * d2};
}

} // namespace

Hamiltonian Hamiltonian::rotation(double rho) {
    auto prof = std::make_shared<PolyProfile>(std::vector<double>{kPi * rho, -kPi * rho});
    return Hamiltonian(HamiltonianKind::RotationFamily, RotationData{rho, std::move(prof)});
}

Hamiltonian Hamiltonian::radial_poly(std::vector<double> coeffs) {
    auto prof = std::make_shared<PolyProfile>(std::move(coeffs));
    return Hamiltonian(HamiltonianKind::RadialPoly, PolyData{std::move(prof)});
}

Hamiltonian Hamiltonian::staircase(double lambda, double eps, double bump_height,
                                   int twist) {
    auto prof = std::make_shared<StaircaseProfile>(lambda, eps, bump_height, twist);
    return Hamiltonian(HamiltonianKind::RadialStaircase, StairData{std::move(prof)});
}

Hamiltonian Hamiltonian::perturbed(std::vector<double> base_coeffs,
                                   std::vector<FourierTerm> terms) {
    for (const auto& term : terms) {
        if (term.angular_harmonic < 0) {
            throw InvalidShapeError("perturbed: angular harmonic must be >= 0");
        }
    }
    auto base = std::make_shared<PolyProfile>(std::move(base_coeffs));
    return Hamiltonian(HamiltonianKind::PerturbedRadial,
                       PerturbedData{std::move(base), std::move(terms)});
}

bool Hamiltonian::is_radial() const {
    return kind_ == HamiltonianKind::RotationFamily ||
           kind_ == HamiltonianKind::RadialPoly ||
           kind_ == HamiltonianKind::RadialStaircase;
}

bool Hamiltonian::is_autonomous() const {
    switch (kind_) {
        case HamiltonianKind::PerturbedRadial: {
            for (const auto& term : perturbed_terms()) {
                if (term.time_harmonic != 0 && term.amplitude != 0.0) return false;
            }
            return true;
        }
        case HamiltonianKind::Mollified:
            return mollified_base().is_autonomous();
        default:
            return true;
    }
}

const RadialProfile& Hamiltonian::profile() const { return *profile_ptr(); }

std::shared_ptr<const RadialProfile> Hamiltonian::profile_ptr() const {
    switch (kind_) {
        case HamiltonianKind::RotationFamily:
            return std::get<RotationData>(data_).prof;
        case HamiltonianKind::RadialPoly:
            return std::get<PolyData>(data_).prof;
        case HamiltonianKind::RadialStaircase:
            return std::get<StairData>(data_).prof;
        default:
            throw Error("profile(): Hamiltonian is not radial");
    }
}

double Hamiltonian::rotation_rho() const {
    return std::get<RotationData>(data_).rho;
}
const std::vector<double>& Hamiltonian::poly_coeffs() const {
    return std::get<PolyData>(data_).prof->coeffs();
}
double Hamiltonian::staircase_lambda() const {
    return std::get<StairData>(data_).prof->lambda();
}
double Hamiltonian::staircase_eps() const {
    return std::get<StairData>(data_).prof->eps();
}
double Hamiltonian::staircase_bump_height() const {
    return std::get<StairData>(data_).prof->bump_height();
}
int Hamiltonian::staircase_twist() const {
    return std::get<StairData>(data_).prof->twist();
}
const std::vector<double>& Hamiltonian::perturbed_base_coeffs() const {
    return std::get<PerturbedData>(data_).base->coeffs();
}
const std::vector<FourierTerm>& Hamiltonian::perturbed_terms() const {
    return std::get<PerturbedData>(data_).terms;
}
const Hamiltonian& Hamiltonian::mollified_base() const {
    return *std::get<MollifiedData>(data_).base;
}
int Hamiltonian::mollified_n() const {
    return std::get<MollifiedData>(data_).collar->n();
}
bool Hamiltonian::mollified_refined() const {
    return std::get<MollifiedData>(data_).refined;
}
const CollarMap& Hamiltonian::mollified_collar() const {
    return *std::get<MollifiedData>(data_).collar;
}

double Hamiltonian::value(double t, const Vec2& z) const {
    switch (kind_) {
        case HamiltonianKind::RotationFamily:
        case HamiltonianKind::RadialPoly:
        case HamiltonianKind::RadialStaircase:
            return profile().g(z.s());
        case HamiltonianKind::PerturbedRadial: {
            const auto& d = std::get<PerturbedData>(data_);
            double v = d.base->g(z.s());
            for (const auto& term : d.terms) v += eval_term(term, t, z, false).value;
            return v;
        }
        case HamiltonianKind::Mollified: {
            const auto& d = std::get<MollifiedData>(data_);
            const double R = z.norm();
            if (R <= 1.0) return d.base->value(t, z);
            const double r = R - 1.0;
            if (r >= d.collar->support_width()) return 0.0;
            const double m = 1.0 + d.collar->value(r);
            return d.base->value(t, z * (m / R));
        }
    }
    return 0.0;
}

Vec2 Hamiltonian::gradient(double t, const Vec2& z) const {
    switch (kind_) {
        case HamiltonianKind::RotationFamily:
        case HamiltonianKind::RadialPoly:
        case HamiltonianKind::RadialStaircase:
            return radial_gradient(profile(), z);
        case HamiltonianKind::PerturbedRadial: {
            const auto& d = std::get<PerturbedData>(data_);
            Vec2 g = radial_gradient(*d.base, z);
            for (const auto& term : d.terms) g += eval_term(term, t, z, false).grad;
            return g;
        }
        case HamiltonianKind::Mollified: {
            const auto& d = std::get<MollifiedData>(data_);
            const double R = z.norm();
            if (R <= 1.0) return d.base->gradient(t, z);
            const double r = R - 1.0;
            if (r >= d.collar->support_width()) return {0.0, 0.0};
            const double m = 1.0 + d.collar->value(r);
            const double mp = d.collar->slope(r);
            const Vec2 u = z * (1.0 / R);        // unit radial
            const Vec2 w = {-u.y, u.x};          // unit tangential
            const Vec2 zp = z * (m / R);
            const Vec2 gb = d.base->gradient(t, zp);
            const double dR = gb.dot(u) * mp;              // d/dR of H_n
            const double dTheta = gb.dot(w) * m;           // d/dtheta of H_n
            return u * dR + w * (dTheta / R);
        }
    }
    return {0.0, 0.0};
}

Hess2 Hamiltonian::hessian(double t, const Vec2& z) const {
    switch (kind_) {
        case HamiltonianKind::RotationFamily:
        case HamiltonianKind::RadialPoly:
        case HamiltonianKind::RadialStaircase:
            return radial_hessian(profile(), z);
        case HamiltonianKind::PerturbedRadial: {
            const auto& d = std::get<PerturbedData>(data_);
            Hess2 h = radial_hessian(*d.base, z);
            for (const auto& term : d.terms) {
                const Hess2 th = eval_term(term, t, z, true).hess;
                h.xx += th.xx;
                h.xy += th.xy;
                h.yy += th.yy;
            }
            return h;
        }
        case HamiltonianKind::Mollified: {
            // Centered differences of the analytic gradient; the mollified
            // kind is never inside Newton loops, so this path is cold.
            const double h = 1e-6;
            const Vec2 gxp = gradient(t, {z.x + h, z.y});
            const Vec2 gxm = gradient(t, {z.x - h, z.y});
            const Vec2 gyp = gradient(t, {z.x, z.y + h});
            const Vec2 gym = gradient(t, {z.x, z.y - h});
            return {(gxp.x - gxm.x) / (2.0 * h),
                    0.5 * ((gxp.y - gxm.y) + (gyp.x - gym.x)) / (2.0 * h),
                    (gyp.y - gym.y) / (2.0 * h)};
        }
    }
    return {};
}

Hamiltonian precompose_rotation(const Hamiltonian& H, int k) {
    if (k == 0) return H;
    switch (H.kind()) {
        case HamiltonianKind::RotationFamily:
            return Hamiltonian::rotation(H.rotation_rho() - k);
        case HamiltonianKind::RadialPoly: {
            std::vector<double> c = H.poly_coeffs();
            if (c.size() < 2) c.resize(2, 0.0);
            c[0] -= kPi * k;
            c[1] += kPi * k;
            return Hamiltonian::radial_poly(std::move(c));
        }
        case HamiltonianKind::RadialStaircase:
            return Hamiltonian::staircase(H.staircase_lambda(), H.staircase_eps(),
                                          H.staircase_bump_height(),
                                          H.staircase_twist() + k);
        case HamiltonianKind::PerturbedRadial: {
            std::vector<double> c = H.perturbed_base_coeffs();
            if (c.size() < 2) c.resize(2, 0.0);
            c[0] -= kPi * k;
            c[1] += kPi * k;
            std::vector<FourierTerm> terms = H.perturbed_terms();
            // theta -> theta + 2 pi k t shifts each time harmonic by l*k
            for (auto& term : terms) term.time_harmonic += term.angular_harmonic * k;
            return Hamiltonian::perturbed(std::move(c), std::move(terms));
        }
        case HamiltonianKind::Mollified:
            throw Error("precompose_rotation: not defined for mollified families");
    }
    throw Error("precompose_rotation: unknown kind");
}

Hamiltonian build_mollified(const Hamiltonian& base, int n, bool refined) {
    if (base.kind() == HamiltonianKind::Mollified) {
        throw Error("build_mollified: base is already mollified");
    }
    if (max_on_boundary(base) > 1e-10) {
        throw BoundaryViolationError("build_mollified: base does not vanish on the boundary");
    }
    Hamiltonian::MollifiedData data{std::make_shared<Hamiltonian>(base),
                                    std::make_shared<CollarMap>(n, refined), refined};
    return Hamiltonian(HamiltonianKind::Mollified, std::move(data));
}

Hamiltonian add_radial(const Hamiltonian& a, const Hamiltonian& b) {
    auto as_coeffs = [](const Hamiltonian& h) -> std::vector<double> {
        switch (h.kind()) {
            case HamiltonianKind::RotationFamily:
                return {kPi * h.rotation_rho(), -kPi * h.rotation_rho()};
            case HamiltonianKind::RadialPoly:
                return h.poly_coeffs();
            default:
                throw Error("add_radial: supported for rotation and polynomial kinds");
        }
    };
    std::vector<double> ca = as_coeffs(a);
    std::vector<double> cb = as_coeffs(b);
    if (cb.size() > ca.size()) std::swap(ca, cb);
    for (std::size_t i = 0; i < cb.size(); ++i) ca[i] += cb[i];
    return Hamiltonian::radial_poly(std::move(ca));
}

double max_on_boundary(const Hamiltonian& H, int space_samples, int time_samples) {
    double worst = 0.0;
    for (int it = 0; it < time_samples; ++it) {
        const double t = static_cast<double>(it) / time_samples;
        for (int i = 0; i < space_samples; ++i) {
            const double th = 2.0 * kPi * i / space_samples;
            worst = std::max(worst, std::fabs(H.value(t, {std::cos(th), std::sin(th)})));
        }
    }
    return worst;
}

namespace {

struct MinMax {
    double lo, hi;
};

// min/max of H(t, .) over a polar grid on [r_lo, r_hi].
MinMax minmax_polar(const Hamiltonian& H, double t, double r_lo, double r_hi,
                    int radial, int angular) {
    MinMax mm{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity()};
    for (int i = 0; i <= radial; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / radial;
        const int na = (r < 1e-12) ? 1 : angular;
        for (int j = 0; j < na; ++j) {
            const double th = 2.0 * kPi * j / angular;
            const double v = H.value(t, {r * std::cos(th), r * std::sin(th)});
            mm.lo = std::min(mm.lo, v);
            mm.hi = std::max(mm.hi, v);
        }
    }
    return mm;
}

} // namespace

double hofer_norm(const Hamiltonian& H, const HoferRegion& region,
                  int space_samples, int time_samples) {
    const int nt = H.is_autonomous() ? 1 : time_samples;
    double r_lo = 0.0, r_hi = 1.0;
    bool include_zero = false;
    switch (region.type) {
        case HoferRegion::Type::Disc:
            break;
        case HoferRegion::Type::Annulus:
            r_lo = 1.0;
            r_hi = 1.0 + 1.0 / region.annulus_n;
            break;
        case HoferRegion::Type::Plane:
            // Mollified families are compactly supported, so the value 0 is
            // attained outside; other kinds vanish on the boundary circle.
            if (H.kind() == HamiltonianKind::Mollified) {
                r_hi = 1.0 + H.mollified_collar().support_width();
                include_zero = true;
            }
            break;
    }
    double total = 0.0;
    for (int it = 0; it < nt; ++it) {
        const double t = static_cast<double>(it) / nt;
        MinMax mm = minmax_polar(H, t, r_lo, r_hi, space_samples, space_samples);
        if (include_zero) {
            mm.lo = std::min(mm.lo, 0.0);
            mm.hi = std::max(mm.hi, 0.0);
        }
        total += (mm.hi - mm.lo) / nt;
    }
    return total;
}

namespace {

double collar_sup(const Hamiltonian& H, bool gradient_norm, int radial, int angular) {
    const double width = H.mollified_collar().support_width();
    const int nt = H.is_autonomous() ? 1 : 8;
    double sup = 0.0;
    for (int it = 0; it < nt; ++it) {
        const double t = static_cast<double>(it) / nt;
        for (int i = 0; i <= radial; ++i) {
            const double r = 1.0 + width * i / radial;
            for (int j = 0; j < angular; ++j) {
                const double th = 2.0 * kPi * j / angular;
                const Vec2 z{r * std::cos(th), r * std::sin(th)};
                const double v = gradient_norm ? H.gradient(t, z).norm()
                                               : std::fabs(H.value(t, z));
                sup = std::max(sup, v);
            }
        }
    }
    return sup;
}

double refined_collar_sup(const Hamiltonian& H, bool gradient_norm) {
    if (H.kind() != HamiltonianKind::Mollified) {
        throw Error("collar diagnostics need a mollified Hamiltonian");
    }
    int radial = 64, angular = 64;
    double prev = collar_sup(H, gradient_norm, radial, angular);
    for (int iter = 0; iter < 5; ++iter) {
        radial *= 2;
        angular *= 2;
        const double cur = collar_sup(H, gradient_norm, radial, angular);
        const double change = std::fabs(cur - prev) / std::max(1e-300, std::fabs(cur));
        prev = cur;
        if (change < 0.01) break;
    }
    return prev;
}

} // namespace

double grad_bound_outside_disc(const Hamiltonian& mollified) {
    return refined_collar_sup(mollified, true);
}

double sup_norm_outside_disc(const Hamiltonian& mollified) {
    return refined_collar_sup(mollified, false);
}

} // namespace discflow
