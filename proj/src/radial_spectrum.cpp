#include "discflow/radial_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discflow/errors.hpp"

namespace discflow {
namespace {

double clampd(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

double newton_polish(const RadialProfile& g, double target, double s0,
                     double lo, double hi) {
    double s = s0;
    for (int i = 0; i < 30; ++i) {
        const double f = g.dg(s) - target;
        const double fp = g.d2g(s);
        if (fp == 0.0) break;
        double next = s - f / fp;
        if (!(next > lo && next < hi)) break;
        if (std::fabs(next - s) < 1e-16) { s = next; break; }
        s = next;
    }
    return s;
}

} // namespace

std::vector<SlopeRoot> solve_slope_equal(const RadialProfile& g, double target,
                                         int grid) {
    std::vector<double> f(grid + 1);
    double scale = 1.0;
    for (int i = 0; i <= grid; ++i) {
        const double s = static_cast<double>(i) / grid;
        f[i] = g.dg(s) - target;
        scale = std::max(scale, std::fabs(g.dg(s)));
    }
    const double ztol = 1e-12 * scale;

    int sign_changes = 0;
    for (int i = 0; i < grid; ++i) {
        if (f[i] * f[i + 1] < 0.0) ++sign_changes;
    }
    if (sign_changes > 10000) {
        throw RootIsolationFailureError("profile slope oscillates beyond the guard");
    }

    std::vector<SlopeRoot> roots;
    auto push_root = [&](double s) {
        for (const auto& r : roots) {
            if (!r.plateau && std::fabs(r.s - s) < 1e-9) return;
        }
        roots.push_back({s, false, 0.0, 0.0});
    };

    int i = 0;
    while (i <= grid) {
        if (std::fabs(f[i]) <= ztol) {
            int j = i;
            while (j + 1 <= grid && std::fabs(f[j + 1]) <= ztol) ++j;
            const double lo = static_cast<double>(i) / grid;
            const double hi = static_cast<double>(j) / grid;
            if (j > i) {
                roots.push_back({0.5 * (lo + hi), true, lo, hi});
            } else {
                push_root(newton_polish(g, target, lo, std::max(0.0, lo - 2.0 / grid),
                                        std::min(1.0, lo + 2.0 / grid)));
            }
            i = j + 1;
            continue;
        }
        if (i < grid && std::fabs(f[i + 1]) > ztol && f[i] * f[i + 1] < 0.0) {
            double lo = static_cast<double>(i) / grid;
            double hi = static_cast<double>(i + 1) / grid;
            double flo = f[i];
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = g.dg(mid) - target;
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            push_root(newton_polish(g, target, 0.5 * (lo + hi),
                                    static_cast<double>(i) / grid,
                                    static_cast<double>(i + 1) / grid));
        }
        ++i;
    }
    std::sort(roots.begin(), roots.end(),
              [](const SlopeRoot& a, const SlopeRoot& b) { return a.s < b.s; });
    return roots;
}

std::vector<double> TangentSpectrum::all_values(double dedup_tol) const {
    std::vector<double> vals;
    vals.push_back(origin_value);
    for (const auto& lv : levels) vals.push_back(lv.value);
    for (double b : boundary_values) vals.push_back(b);
    std::sort(vals.begin(), vals.end());
    std::vector<double> out;
    for (double v : vals) {
        if (out.empty() || v - out.back() > dedup_tol) out.push_back(v);
    }
    return out;
}

TangentSpectrum tangent_spectrum(const RadialProfile& g, int slope_range, int grid) {
    TangentSpectrum spec;
    spec.origin_value = g.g(0.0);
    for (int k = -slope_range; k <= slope_range; ++k) {
        const double target = -kPi * k;
        for (const SlopeRoot& root : solve_slope_equal(g, target, grid)) {
            TangentLevel lv;
            lv.s = root.s;
            lv.slope_index = k;
            lv.value = g.g(root.s) - root.s * g.dg(root.s);
            lv.plateau = root.plateau;
            spec.levels.push_back(lv);
        }
    }
    const double d1 = g.dg(1.0);
    const double k_b = -d1 / kPi;
    if (std::fabs(k_b - std::round(k_b)) * kPi <= 1e-10) {
        spec.boundary_values.push_back(g.g(1.0) - d1);
    }
    std::sort(spec.levels.begin(), spec.levels.end(),
              [](const TangentLevel& a, const TangentLevel& b) { return a.value < b.value; });
    return spec;
}

GapCertificate staircase_gap_certificate(double lambda, double eps, double bump_height) {
    const StaircaseProfile prof(lambda, eps, bump_height);
    double max_slope = 0.0;
    for (int i = 0; i <= 4096; ++i) {
        max_slope = std::max(max_slope, std::fabs(prof.dg(i / 4096.0)));
    }
    const int range = static_cast<int>(std::ceil(max_slope / kPi)) + 1;
    const TangentSpectrum spec = tangent_spectrum(prof, range);

    GapCertificate cert;
    cert.bump_height = bump_height;
    cert.gap_holds = true;
    cert.min_positive = std::numeric_limits<double>::infinity();
    for (double v : spec.all_values()) {
        if (v < -1e-9) continue;
        cert.nonneg_values.push_back(v);
        if (v > 1e-9) {
            cert.min_positive = std::min(cert.min_positive, v);
            if (v < bump_height - 1e-6) cert.gap_holds = false;
        }
    }
    if (!std::isfinite(cert.min_positive)) cert.min_positive = 0.0;
    return cert;
}

RotationInvariants rotation_spectral_invariants(double rho) {
    RotationInvariants inv;
    inv.c_plus = clampd(kPi * rho, 0.0, kPi);
    inv.c_minus = clampd(kPi * rho, -kPi, 0.0);
    inv.derivation = {
        "spec = {pi*rho}: every periodic point of the rotation has mean action pi*rho",
        "membership: c+ in spec u {0} u {pi}, c- in spec u {0} u {-pi}",
        "0 <= rho <= 1 places c+ in spec; rho > 0 forces c+ > 0, rho < 0 forces c- < 0",
        "duality c+(inverse) = -c-, applied to the rotation by -rho",
        "c+ = clamp(pi*rho, 0, pi), c- = clamp(pi*rho, -pi, 0)",
    };
    return inv;
}

bool subadditivity_check_rotations(double rho1, double rho2) {
    const double lhs = clampd(kPi * (rho1 + rho2), 0.0, kPi);
    const double rhs = clampd(kPi * rho1, 0.0, kPi) + clampd(kPi * rho2, 0.0, kPi);
    return lhs <= rhs + 1e-12;
}

namespace {

struct CPlusBound {
    bool pinned{false};
    double lo{0.0}, hi{kPi};
    std::string label{"not pinned by closed-form logic"};
};

CPlusBound pin_c_plus(const Hamiltonian& H) {
    CPlusBound b;
    switch (H.kind()) {
        case HamiltonianKind::RotationFamily: {
            const double c = clampd(kPi * H.rotation_rho(), 0.0, kPi);
            return {true, c, c, "rotation closed form"};
        }
        case HamiltonianKind::RadialPoly: {
            const auto* prof = dynamic_cast<const PolyProfile*>(&H.profile());
            if (prof->is_zero(1e-15)) return {true, 0.0, 0.0, "zero isotopy"};
            if (prof->is_linear()) {
                const double c = clampd(prof->g(0.0), 0.0, kPi);
                return {true, c, c, "rotation closed form (linear profile)"};
            }
            return b;
        }
        case HamiltonianKind::RadialStaircase: {
            if (H.staircase_twist() != 0) return b;
            const GapCertificate cert = staircase_gap_certificate(
                H.staircase_lambda(), H.staircase_eps(), H.staircase_bump_height());
            if (cert.gap_holds) {
                return {true, H.staircase_bump_height(), kPi,
                        "staircase gap certificate (lower bound)"};
            }
            return b;
        }
        default:
            return b;
    }
}

} // namespace

MonotonicityReport monotonicity_check_radial(const Hamiltonian& g1,
                                             const Hamiltonian& g2) {
    if (!g1.is_radial() || !g2.is_radial()) {
        throw Error("monotonicity_check_radial: radial families required");
    }
    MonotonicityReport rep;
    rep.hypothesis_ok = true;
    for (int i = 0; i <= 4096; ++i) {
        const double s = i / 4096.0;
        if (g1.profile().g(s) < g2.profile().g(s) - 1e-12) {
            rep.hypothesis_ok = false;
            break;
        }
    }
    const CPlusBound b1 = pin_c_plus(g1);
    const CPlusBound b2 = pin_c_plus(g2);
    rep.c1_lo = b1.lo;
    rep.c1_hi = b1.hi;
    rep.c2_lo = b2.lo;
    rep.c2_hi = b2.hi;
    rep.bound_g1 = b1.label;
    rep.bound_g2 = b2.label;
    if (!b1.pinned && !b2.pinned) {
        rep.status = MonotonicityStatus::Indeterminate;
        return rep;
    }
    if (b1.hi < b2.lo - 1e-9) {
        rep.status = MonotonicityStatus::Inconsistent;
    } else if (b1.lo >= b2.hi - 1e-9) {
        rep.status = MonotonicityStatus::Consistent;
    } else {
        rep.status = MonotonicityStatus::Indeterminate;
    }
    return rep;
}

} // namespace discflow
