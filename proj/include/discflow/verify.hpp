#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "discflow/hamiltonian.hpp"
#include "discflow/spectrum.hpp"

namespace discflow {

enum class CheckStatus { WitnessFound, Inconclusive, Violation };

const char* to_string(CheckStatus s);

/// Outcome of one theorem check. Sampled spectra only bound the true inf/sup
/// from one side, so a failed bracket is Inconclusive; Violation is reserved
/// for closed-form quantities contradicting a theorem beyond 10x tolerance
/// and should never occur.
struct Verdict {
    std::string check_name;
    CheckStatus status{CheckStatus::Inconclusive};
    nlohmann::json evidence;
    nlohmann::json family;
    std::string family_hash;

    nlohmann::json to_json() const;
};

struct CheckOptions {
    int period_cutoff{16};
    SeedSpec seeds{};
    double tol{1e-6};
    CalabiOptions calabi{};
};

/// Bracket check inf sample <= Cal_sigma / area <= sup sample + tol on the
/// sampled interior mean action spectrum (normalized per unit area).
Verdict check_hutchings(const Hamiltonian& H, int K, const CheckOptions& opts = {});

/// Boundary mean action a = area * rho lies within tol of a sampled interior
/// mean action; tol defaults to max(0.1, 4*area/K).
Verdict check_boundary_in_closure(const Hamiltonian& H, int K, double tol = -1.0,
                                  const CheckOptions& opts = {});

/// Existence of an interior fixed point with |sigma(x) - pi k| <= pi, where
/// k indexes the boundary mean action window a in [k pi, (k+1) pi).
Verdict check_quantitative_brouwer(const Hamiltonian& H, const CheckOptions& opts = {});

/// For each n, mollifies H (refined profile), integrates time-1 orbit
/// segments seeded in the support collar, and checks |winding| < 1 for all
/// segments staying outside the open disc. Requires |rho| < 1.
Verdict check_wind_bound(const Hamiltonian& H, const std::vector<int>& n_list,
                         const CheckOptions& opts = {});

/// Membership of the closed-form rotation invariants in spec u {0} u {A} and
/// in the windowed clauses, including the non-spectral corner cases.
Verdict check_membership_rotations(const std::vector<double>& rhos);

/// Membership logic for a radial family: candidate spectral values compatible
/// with the applicable clauses, from the tangent-line spectrum.
Verdict check_membership_radial(const Hamiltonian& H, const CheckOptions& opts = {});

} // namespace discflow
