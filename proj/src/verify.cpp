#include "discflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discflow/action.hpp"
#include "discflow/errors.hpp"
#include "discflow/radial_spectrum.hpp"
#include "discflow/serialize.hpp"

namespace discflow {

using nlohmann::json;

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::WitnessFound: return "WITNESS_FOUND";
        case CheckStatus::Inconclusive: return "INCONCLUSIVE";
        case CheckStatus::Violation: return "VIOLATION";
    }
    return "?";
}

json Verdict::to_json() const {
    return {{"check", check_name},
            {"status", to_string(status)},
            {"evidence", evidence},
            {"family", family},
            {"family_hash", family_hash}};
}

namespace {

Verdict make_verdict(const std::string& name, const Hamiltonian& H) {
    Verdict v;
    v.check_name = name;
    v.family = to_json(H);
    v.family_hash = family_hash(H);
    return v;
}

} // namespace

Verdict check_hutchings(const Hamiltonian& H, int K, const CheckOptions& opts) {
    Verdict v = make_verdict("hutchings", H);
    const SpectrumReport report = interior_mean_spectrum(H, K, opts.seeds);
    const double cal_sigma = calabi(H, CalabiMethod::SigmaAverage, opts.calabi);
    const double cal_norm = cal_sigma / kPi;  // spatial average, area pi

    const auto& sample = report.interior_mean_spectrum_sample;
    v.evidence["period_cutoff"] = K;
    v.evidence["calabi_sigma"] = cal_sigma;
    v.evidence["calabi_normalized"] = cal_norm;
    v.evidence["calabi_H"] = calabi(H, CalabiMethod::TimeSpace, opts.calabi);
    v.evidence["sample_size"] = sample.size();
    v.evidence["tol"] = opts.tol;
    if (sample.empty()) {
        v.status = CheckStatus::Inconclusive;
        v.evidence["note"] = "no interior periodic orbits sampled";
        return v;
    }
    const double lo = sample.front();
    const double hi = sample.back();
    v.evidence["sample_min"] = lo;
    v.evidence["sample_max"] = hi;
    // The sample min (max) only bounds inf (sup) from above (below), so a
    // failed bracket never refutes the theorem.
    v.status = (lo <= cal_norm + opts.tol && cal_norm <= hi + opts.tol)
                   ? CheckStatus::WitnessFound
                   : CheckStatus::Inconclusive;
    return v;
}

Verdict check_boundary_in_closure(const Hamiltonian& H, int K, double tol,
                                  const CheckOptions& opts) {
    Verdict v = make_verdict("closure", H);
    if (tol <= 0.0) tol = std::max(0.1, 4.0 * kPi / K);
    const SpectrumReport report = interior_mean_spectrum(H, K, opts.seeds);
    const double a = report.boundary_mean_action;
    double best = std::numeric_limits<double>::infinity();
    double witness = 0.0;
    for (double m : report.interior_mean_spectrum_sample) {
        if (std::fabs(m - a) < best) {
            best = std::fabs(m - a);
            witness = m;
        }
    }
    v.evidence["period_cutoff"] = K;
    v.evidence["boundary_mean_action"] = a;
    v.evidence["boundary_rotation"] = report.boundary_rotation;
    v.evidence["tol"] = tol;
    if (std::isfinite(best)) {
        v.evidence["closest_sample"] = witness;
        v.evidence["distance"] = best;
    }
    v.status = best <= tol ? CheckStatus::WitnessFound : CheckStatus::Inconclusive;
    return v;
}

Verdict check_quantitative_brouwer(const Hamiltonian& H, const CheckOptions& opts) {
    Verdict v = make_verdict("brouwer", H);
    const double rho = boundary_rotation_number(H, 1024);
    const double a = kPi * rho;
    const int k = static_cast<int>(std::floor(a / kPi));
    const auto records = find_periodic_orbits(H, 1, opts.seeds);
    v.evidence["boundary_mean_action"] = a;
    v.evidence["k"] = k;
    double best = std::numeric_limits<double>::infinity();
    json witness;
    for (const auto& rec : records) {
        if (rec.location == OrbitLocation::Boundary) continue;
        const double dev = std::fabs(rec.action_total - kPi * k);
        if (dev < best) {
            best = dev;
            witness = {{"x", rec.point.x},
                       {"y", rec.point.y},
                       {"sigma", rec.action_total},
                       {"deviation", dev}};
        }
    }
    if (std::isfinite(best)) {
        v.evidence["witness"] = witness;
        v.evidence["bound"] = kPi;
    }
    v.status = (std::isfinite(best) && best <= kPi + 1e-6) ? CheckStatus::WitnessFound
                                                           : CheckStatus::Inconclusive;
    return v;
}

Verdict check_wind_bound(const Hamiltonian& H, const std::vector<int>& n_list,
                         const CheckOptions& /*opts*/) {
    Verdict v = make_verdict("wind", H);
    const double rho = boundary_rotation_number(H, 1024);
    if (std::fabs(rho) >= 1.0) {
        throw PreconditionRhoError("check_wind_bound: |rho| >= 1");
    }
    v.evidence["rho"] = rho;
    json per_n = json::array();
    bool ok = true;
    for (int n : n_list) {
        const Hamiltonian Hn = build_mollified(H, n, /*refined=*/true);
        const double width = 1.0 / n;
        double max_wind = 0.0;
        int kept = 0, discarded = 0;
        const int radial = 12, angular = 24;
        for (int i = 0; i <= radial; ++i) {
            const double r = 1.0 + width * i / radial;
            for (int j = 0; j < angular; ++j) {
                const double th = 2.0 * kPi * j / angular;
                const Vec2 z0{r * std::cos(th), r * std::sin(th)};
                const OrbitTrace trace = integrate_orbit(Hn, z0, 1.0, 2000);
                double min_r = 10.0;
                for (const auto& p : trace.points) min_r = std::min(min_r, p.norm());
                if (min_r < 1.0 - 1e-9 || !trace.has_angle_lift) {
                    ++discarded;  // segment entered the open disc
                    continue;
                }
                ++kept;
                const double wind =
                    (trace.angle_lift.back() - trace.angle_lift.front()) / (2.0 * kPi);
                if (std::fabs(wind) > std::fabs(max_wind)) max_wind = wind;
            }
        }
        per_n.push_back({{"n", n},
                         {"max_abs_wind", std::fabs(max_wind)},
                         {"extreme_wind", max_wind},
                         {"segments", kept},
                         {"discarded", discarded}});
        if (n == *std::max_element(n_list.begin(), n_list.end())) {
            ok = std::fabs(max_wind) < 1.0 - 1e-3;
        }
    }
    v.evidence["per_n"] = per_n;
    v.status = ok ? CheckStatus::WitnessFound : CheckStatus::Inconclusive;
    return v;
}

namespace {

bool in_set(double x, const std::vector<double>& set, double tol) {
    for (double s : set) {
        if (std::fabs(x - s) <= tol) return true;
    }
    return false;
}

} // namespace

Verdict check_membership_rotations(const std::vector<double>& rhos) {
    Verdict v;
    v.check_name = "membership";
    v.family = {{"kind", "rotation_sweep"}, {"count", rhos.size()}};
    v.family_hash = "rotation_sweep";
    const double tol = 1e-12;
    json rows = json::array();
    bool all_ok = true;
    bool violation = false;
    for (double rho : rhos) {
        const RotationInvariants inv = rotation_spectral_invariants(rho);
        const double spec_value = kPi * rho;  // action at every periodic point
        json row;
        row["rho"] = rho;
        row["c_plus"] = inv.c_plus;
        row["c_minus"] = inv.c_minus;

        bool ok = true;
        // Main membership: c+ in spec u {0} u {A}, c- in spec u {0} u {-A}.
        ok &= in_set(inv.c_plus, {spec_value, 0.0, kPi}, tol);
        ok &= in_set(inv.c_minus, {spec_value, 0.0, -kPi}, tol);
        // Windowed clauses.
        if (rho > -1.0 && rho <= 1.0) ok &= in_set(inv.c_plus, {spec_value, 0.0}, tol);
        if (rho >= 0.0 && rho <= 1.0) ok &= std::fabs(inv.c_plus - spec_value) <= tol;
        if (rho >= -1.0 && rho < 1.0) ok &= in_set(inv.c_minus, {spec_value, 0.0}, tol);
        if (rho >= -1.0 && rho <= 0.0) ok &= std::fabs(inv.c_minus - spec_value) <= tol;
        // Sign forcing.
        if (rho > 0.0) ok &= inv.c_plus > 0.0;
        if (rho < 0.0) ok &= inv.c_minus < 0.0;
        // Duality and normalization.
        ok &= std::fabs(inv.c_plus - (-rotation_spectral_invariants(-rho).c_minus)) <= tol;
        ok &= inv.c_minus <= tol && inv.c_plus >= -tol;
        ok &= inv.c_plus - inv.c_minus <= kPi + tol;
        // Corner cases: outside [0,1] (resp. [-1,0]) the invariants stop
        // being spectral values.
        const bool cp_spectral = std::fabs(inv.c_plus - spec_value) <= tol;
        const bool cm_spectral = std::fabs(inv.c_minus - spec_value) <= tol;
        if (rho > 1.0 || rho < 0.0) ok &= !cp_spectral;
        if (rho > 0.0 || rho < -1.0) ok &= !cm_spectral;
        row["c_plus_spectral"] = cp_spectral;
        row["c_minus_spectral"] = cm_spectral;
        row["ok"] = ok;
        if (!ok) {
            all_ok = false;
            // Closed-form contradiction: fail loudly (this should not happen).
            violation = true;
        }
        rows.push_back(row);
    }
    v.evidence["rows"] = rows;
    v.status = violation ? CheckStatus::Violation
                         : (all_ok ? CheckStatus::WitnessFound : CheckStatus::Inconclusive);
    return v;
}

Verdict check_membership_radial(const Hamiltonian& H, const CheckOptions& /*opts*/) {
    Verdict v = make_verdict("membership", H);
    if (!H.is_radial()) throw Error("check_membership_radial: radial family required");
    const double rho = boundary_rotation_number(H, 1024);
    double max_slope = 1.0;
    for (int i = 0; i <= 4096; ++i) {
        max_slope = std::max(max_slope, std::fabs(H.profile().dg(i / 4096.0)));
    }
    const TangentSpectrum spec =
        tangent_spectrum(H.profile(), static_cast<int>(std::ceil(max_slope / kPi)) + 1);
    const std::vector<double> values = spec.all_values();

    // Candidate sets allowed by the applicable clauses; by one-sidedness a
    // nonempty candidate set is a consistency witness, never a proof.
    std::vector<double> cplus_candidates;
    json clauses = json::array();
    const bool window_plus = rho >= 0.0 && rho <= 1.0;
    for (double val : values) {
        if (val >= -1e-12 && val <= kPi + 1e-12) cplus_candidates.push_back(val);
    }
    if (!window_plus) {
        // Only the coarse membership applies; 0 and A are always candidates.
        cplus_candidates.push_back(0.0);
        cplus_candidates.push_back(kPi);
    } else if (rho > 0.0) {
        // Sign forcing removes nonpositive candidates.
        std::vector<double> filtered;
        for (double c : cplus_candidates) {
            if (c > 1e-12) filtered.push_back(c);
        }
        cplus_candidates = filtered;
    }
    clauses.push_back({{"clause", window_plus ? "c+ in spec (0<=rho<=1)"
                                              : "c+ in spec u {0} u {A}"},
                       {"candidates", cplus_candidates}});
    v.evidence["rho"] = rho;
    v.evidence["spectrum"] = values;
    v.evidence["clauses"] = clauses;
    v.status = cplus_candidates.empty() ? CheckStatus::Inconclusive
                                        : CheckStatus::WitnessFound;
    return v;
}

} // namespace discflow
