#include "discflow/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "discflow/errors.hpp"
#include "discflow/radial_spectrum.hpp"

namespace discflow {
namespace {

constexpr double kClusterRadius = 1e-6;
constexpr double kResidualBound = 1e-9;

int gcd_int(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }

FlowOptions search_opts(const SeedSpec& seeds, bool jac) {
    FlowOptions o;
    o.steps_per_unit = seeds.search_steps_per_unit;
    o.with_jacobian = jac;
    return o;
}

/// phi^k(z) - z and the derivative matrix at search resolution.
struct MapEval {
    Vec2 F;
    Mat2 A;  // D phi^k - I
    Vec2 endpoint;
};

MapEval eval_map(const Hamiltonian& H, const Vec2& z, int k, const SeedSpec& seeds,
                 bool jac) {
    const FlowPoint fp = flow_map(H, z, static_cast<double>(k), search_opts(seeds, jac));
    MapEval out;
    out.endpoint = fp.z;
    out.F = fp.z - z;
    out.A = fp.jac - Mat2::identity();
    return out;
}

struct NewtonOutcome {
    bool converged{false};
    Vec2 z;
};

NewtonOutcome newton_periodic(const Hamiltonian& H, Vec2 z, int k,
                              const SeedSpec& seeds) {
    double fn = eval_map(H, z, k, seeds, false).F.norm();
    double mu = 1e-10;  // Levenberg damping; grows when steps are rejected
    for (int iter = 0; iter < seeds.newton_max_iter; ++iter) {
        if (z.norm() > 1.0) return {};  // iterate exited the disc
        if (fn < 1e-11) return {true, z};
        const MapEval ev = eval_map(H, z, k, seeds, true);
        // (A^T A + mu I) dz = -A^T F; near-degenerate circles make A nearly
        // rank one, so pure Newton steps are unusable there.
        const Mat2& A = ev.A;
        const Mat2 N{A.a11 * A.a11 + A.a21 * A.a21 + mu,
                     A.a11 * A.a12 + A.a21 * A.a22,
                     A.a11 * A.a12 + A.a21 * A.a22,
                     A.a12 * A.a12 + A.a22 * A.a22 + mu};
        const Vec2 rhs{-(A.a11 * ev.F.x + A.a21 * ev.F.y),
                       -(A.a12 * ev.F.x + A.a22 * ev.F.y)};
        const double det = N.det();
        if (det <= 0.0 || !std::isfinite(det)) return {};
        Vec2 dz{(rhs.x * N.a22 - rhs.y * N.a12) / det,
                (rhs.y * N.a11 - rhs.x * N.a21) / det};
        const double dn = dz.norm();
        if (dn > 0.25) dz = dz * (0.25 / dn);
        // Armijo backtracking on |F|.
        double step = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 12; ++bt) {
            const Vec2 cand = z + dz * step;
            if (cand.norm() <= 1.0) {
                const double fc = eval_map(H, cand, k, seeds, false).F.norm();
                if (fc < fn * (1.0 - 1e-4 * step) || fc < 1e-11) {
                    z = cand;
                    fn = fc;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (accepted) {
            mu = std::max(mu / 3.0, 1e-12);
        } else {
            mu *= 100.0;
            if (mu > 1e6) return {};
        }
    }
    return {fn < 1e-11, z};
}

/// Minimal period of a converged point: smallest divisor d of k that closes.
int minimal_period(const Hamiltonian& H, const Vec2& z, int k, const SeedSpec& seeds) {
    FlowOptions o;
    o.steps_per_unit = seeds.polish_steps_per_unit;
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        if ((flow_map(H, z, d, o).z - z).norm() <= 1e-8) return d;
    }
    return k;
}

struct Candidate {
    Vec2 z;
    int period;
    double residual;
};

/// Cross-resolution verification of a root; fills the record numbers.
bool finalize_record(const Hamiltonian& H, const Vec2& z, int period,
                     const SeedSpec& seeds, OrbitRecord& rec) {
    FlowOptions polish;
    polish.steps_per_unit = seeds.polish_steps_per_unit;
    FlowOptions doubled = polish;
    doubled.steps_per_unit *= 2;
    const FlowPoint fine = flow_map(H, z, period, doubled);
    const double residual = (fine.z - z).norm();
    if (residual > kResidualBound) return false;
    rec.point = z;
    rec.period = period;
    rec.residual = residual;
    rec.action_total = fine.action;
    rec.mean_action = fine.action / period;
    rec.location = (std::fabs(z.norm() - 1.0) <= 1e-8) ? OrbitLocation::Boundary
                                                       : OrbitLocation::Interior;
    rec.circle_s = z.s();
    return true;
}

/// Exact treatment of radial families: resonant circles g'(s) = -pi p/q.
void radial_exact_records(const Hamiltonian& H, int K, const SeedSpec& seeds,
                          std::vector<OrbitRecord>& records,
                          std::vector<int>& identity_periods) {
    const RadialProfile& prof = H.profile();

    // Identity periods occur only for linear profiles (rigid rotations) with
    // rational rotation parameter.
    const auto* poly = dynamic_cast<const PolyProfile*>(&prof);
    const bool linear = poly != nullptr && poly->is_linear();
    if (linear) {
        const double rho = -prof.dg(0.0) / kPi;
        for (int q = 1; q <= K; ++q) {
            if (std::fabs(rho * q - std::round(rho * q)) <= 1e-9 * std::max(1, q)) {
                for (int m = q; m <= K; m += q) identity_periods.push_back(m);
                break;
            }
        }
        std::sort(identity_periods.begin(), identity_periods.end());
        identity_periods.erase(
            std::unique(identity_periods.begin(), identity_periods.end()),
            identity_periods.end());
    }

    // Origin fixed point.
    {
        OrbitRecord rec;
        if (finalize_record(H, {0.0, 0.0}, 1, seeds, rec)) records.push_back(rec);
    }

    if (linear && !identity_periods.empty() && identity_periods.front() == 1) {
        return;  // the time-one map is the identity; circles are meaningless
    }

    double dmin = 0.0, dmax = 0.0;
    for (int i = 0; i <= 4096; ++i) {
        const double d = prof.dg(i / 4096.0);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }

    struct Level {
        double s;
        int period;
        double alpha_target;  // 2*pi*p/q, the exact angle advance per unit time
    };
    std::vector<Level> levels;
    auto known = [&](double s) {
        for (const auto& lv : levels) {
            if (std::fabs(lv.s - s) < 1e-9) return true;
        }
        return false;
    };
    for (int q = 1; q <= K; ++q) {
        if (linear && !identity_periods.empty()) break;
        const int p_lo = static_cast<int>(std::floor(-q * dmax / kPi)) - 1;
        const int p_hi = static_cast<int>(std::ceil(-q * dmin / kPi)) + 1;
        for (int p = p_lo; p <= p_hi; ++p) {
            if (q > 1 && gcd_int(p, q) != 1) continue;
            if (linear) continue;  // constant slope: either identity or no roots
            const double target = -kPi * p / q;
            if (target < dmin - 1e-9 || target > dmax + 1e-9) continue;
            for (const SlopeRoot& root : solve_slope_equal(prof, target)) {
                if (root.s >= 1.0 - 1e-12 || known(root.s)) continue;
                levels.push_back({root.s, q, 2.0 * kPi * p / q});
            }
        }
    }

    // Radial circles are verified through the circle reduction: the flow
    // preserves |z|, so |phi^q(z) - z| is controlled by the measured angle
    // advance per unit time and the measured radius drift. One unit-time
    // trace per resolution replaces a q-unit integration.
    for (const auto& lv : levels) {
        const Vec2 z{std::sqrt(lv.s), 0.0};
        const double speed = std::fabs(2.0 * prof.dg(lv.s));
        const int base_steps =
            std::max(seeds.polish_steps_per_unit, static_cast<int>(400.0 * speed));
        double residual = 0.0;
        double action_unit = 0.0;
        for (int pass = 0; pass < 2; ++pass) {
            const int steps = base_steps * (pass + 1);
            const OrbitTrace tr = integrate_orbit(H, z, 1.0, steps);
            const double alpha = tr.angle_lift.back() - tr.angle_lift.front();
            const double drift = std::fabs(tr.points.back().norm() - z.norm());
            const double chord =
                z.norm() * std::fabs(2.0 * std::sin(0.5 * lv.period *
                                                    (alpha - lv.alpha_target)));
            residual = std::max(residual, chord + lv.period * drift);
            action_unit = tr.action.back();
        }
        OrbitRecord rec;
        rec.point = z;
        rec.period = lv.period;
        rec.residual = residual;
        rec.action_total = action_unit * lv.period;
        rec.mean_action = action_unit;
        rec.location = OrbitLocation::DegenerateCircle;
        rec.circle_s = lv.s;
        records.push_back(rec);
    }

    // Boundary circle resonance.
    const double d1 = prof.dg(1.0);
    for (int q = 1; q <= K; ++q) {
        const double pq = -d1 * q / kPi;
        if (std::fabs(pq - std::round(pq)) <= 1e-10 * q &&
            (q == 1 || gcd_int(static_cast<int>(std::round(pq)), q) == 1)) {
            OrbitRecord rec;
            rec.point = {1.0, 0.0};
            rec.period = q;
            rec.residual = 0.0;
            rec.mean_action = prof.g(1.0) - d1;
            rec.action_total = rec.mean_action * q;
            rec.location = OrbitLocation::Boundary;
            rec.circle_s = 1.0;
            records.push_back(rec);
            break;
        }
    }
}

std::vector<Vec2> lattice_seeds(const SeedSpec& seeds) {
    std::vector<Vec2> out;
    for (int i = 0; i < seeds.grid; ++i) {
        for (int j = 0; j < seeds.grid; ++j) {
            const Vec2 z{-seeds.max_radius + 2.0 * seeds.max_radius * i / (seeds.grid - 1.0),
                         -seeds.max_radius + 2.0 * seeds.max_radius * j / (seeds.grid - 1.0)};
            if (z.norm() <= seeds.max_radius) out.push_back(z);
        }
    }
    return out;
}

std::vector<Vec2> ring_seeds_for_period(const Hamiltonian& H, int k,
                                        const SeedSpec& seeds) {
    std::vector<Vec2> out;
    if (H.kind() != HamiltonianKind::PerturbedRadial) return out;
    const PolyProfile base(H.perturbed_base_coeffs());
    double dmin = 0.0, dmax = 0.0;
    for (int i = 0; i <= 1024; ++i) {
        const double d = base.dg(i / 1024.0);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    const int p_lo = static_cast<int>(std::floor(-k * dmax / kPi)) - 1;
    const int p_hi = static_cast<int>(std::ceil(-k * dmin / kPi)) + 1;
    for (int p = p_lo; p <= p_hi; ++p) {
        if (k > 1 && gcd_int(p, k) != 1) continue;
        const double target = -kPi * p / k;
        if (target < dmin - 1e-9 || target > dmax + 1e-9) continue;
        for (const SlopeRoot& root : solve_slope_equal(base, target, 2048)) {
            const double r = std::sqrt(std::max(0.0, root.s));
            if (r >= seeds.max_radius) continue;
            for (int a = 0; a < seeds.ring_seeds; ++a) {
                const double th = 2.0 * kPi * a / seeds.ring_seeds;
                out.push_back({r * std::cos(th), r * std::sin(th)});
            }
        }
    }
    return out;
}

} // namespace

std::vector<OrbitRecord> find_periodic_orbits(const Hamiltonian& H, int K,
                                              const SeedSpec& seeds, int* dropped,
                                              std::vector<int>* identity_out) {
    std::vector<OrbitRecord> records;
    std::vector<int> identity_periods;
    int dropped_count = 0;

    if (H.is_radial()) {
        radial_exact_records(H, K, seeds, records, identity_periods);
        // Small Newton cross-check at period 1 merges into the exact set.
        SeedSpec cross = seeds;
        cross.grid = std::min(seeds.grid, 6);
        for (const Vec2& seed : lattice_seeds(cross)) {
            const NewtonOutcome res = newton_periodic(H, seed, 1, seeds);
            if (!res.converged) {
                ++dropped_count;
                continue;
            }
            bool merged = false;
            for (const auto& rec : records) {
                if (rec.location == OrbitLocation::DegenerateCircle ||
                    rec.location == OrbitLocation::Boundary) {
                    if (std::fabs(res.z.s() - rec.circle_s) < 1e-5) merged = true;
                } else if ((res.z - rec.point).norm() < kClusterRadius) {
                    merged = true;
                }
                if (merged) break;
            }
            if (!merged) {
                OrbitRecord rec;
                if (finalize_record(H, res.z, 1, seeds, rec)) records.push_back(rec);
            }
        }
    } else {
        // Identity probe, advanced one period at a time.
        std::vector<Vec2> probes = {{0.3, 0.1},  {-0.5, 0.2}, {0.1, -0.6},
                                    {0.7, 0.0},  {0.0, 0.85}, {-0.25, -0.25},
                                    {0.55, 0.4}, {-0.1, 0.05}};
        std::vector<Vec2> advanced = probes;
        FlowOptions polish;
        polish.steps_per_unit = seeds.polish_steps_per_unit;

        // One orbit record per detected orbit; duplicates are matched against
        // every point of the stored orbit (cluster radius 1e-6).
        std::vector<std::vector<Vec2>> orbit_points;

        for (int k = 1; k <= K; ++k) {
            for (Vec2& p : advanced) p = flow_map(H, p, 1.0, polish).z;
            double id_dev = 0.0;
            for (std::size_t i = 0; i < probes.size(); ++i) {
                id_dev = std::max(id_dev, (advanced[i] - probes[i]).norm());
            }
            if (id_dev <= 1e-8) {
                identity_periods.push_back(k);
                continue;
            }

            std::vector<Vec2> batch;
            if (k == 1 || seeds.lattice_every_period) {
                batch = lattice_seeds(seeds);
            }
            if (seeds.resonance_guided) {
                const auto rings = ring_seeds_for_period(H, k, seeds);
                batch.insert(batch.end(), rings.begin(), rings.end());
            }
            for (const Vec2& seed : batch) {
                const NewtonOutcome res = newton_periodic(H, seed, k, seeds);
                if (!res.converged) {
                    ++dropped_count;
                    continue;
                }
                const int d = minimal_period(H, res.z, k, seeds);
                bool duplicate = false;
                for (const auto& orbit : orbit_points) {
                    for (const Vec2& q : orbit) {
                        if ((res.z - q).norm() < kClusterRadius) {
                            duplicate = true;
                            break;
                        }
                    }
                    if (duplicate) break;
                }
                if (duplicate) continue;
                OrbitRecord rec;
                if (!finalize_record(H, res.z, d, seeds, rec)) {
                    ++dropped_count;
                    continue;
                }
                records.push_back(rec);
                std::vector<Vec2> orbit;
                Vec2 cur = res.z;
                orbit.push_back(cur);
                for (int j = 1; j < d; ++j) {
                    cur = flow_map(H, cur, 1.0, polish).z;
                    orbit.push_back(cur);
                }
                orbit_points.push_back(std::move(orbit));
            }
        }
    }

    std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.period != b.period) return a.period < b.period;
        if (a.mean_action != b.mean_action) return a.mean_action < b.mean_action;
        if (a.point.x != b.point.x) return a.point.x < b.point.x;
        return a.point.y < b.point.y;
    });
    if (dropped != nullptr) *dropped = dropped_count;
    if (identity_out != nullptr) *identity_out = identity_periods;
    return records;
}

double boundary_rotation_number(const Hamiltonian& H, int iterates, bool refine) {
    const double theta0 = 0.0;
    const double full = boundary_angle_lift(H, theta0, iterates);
    const double rho_n = (full - theta0) / (2.0 * kPi * iterates);
    if (!refine || iterates < 2) return rho_n;
    const int half = iterates / 2;
    const double half_lift = boundary_angle_lift(H, theta0, half);
    const double rho_h = (half_lift - theta0) / (2.0 * kPi * half);
    return 2.0 * rho_n - rho_h;
}

double birkhoff_mean_action(const Hamiltonian& H, const Vec2& z, int N,
                            int steps_per_unit) {
    if (z.norm() > 1.0 + 1e-9) {
        throw OutsideDiscError("birkhoff_mean_action: point outside the disc");
    }
    if (std::fabs(z.norm() - 1.0) <= 1e-12) {
        const double th0 = z.angle();
        const double lift = boundary_angle_lift(H, th0, N, 1024);
        return 0.5 * (lift - th0) / N;
    }
    FlowOptions opts;
    opts.steps_per_unit = steps_per_unit;
    return flow_map(H, z, static_cast<double>(N), opts).action / N;
}

SpectrumReport interior_mean_spectrum(const Hamiltonian& H, int K,
                                      const SeedSpec& seeds) {
    SpectrumReport report;
    report.period_cutoff = K;
    report.orbits =
        find_periodic_orbits(H, K, seeds, &report.dropped_seeds, &report.identity_periods);
    report.boundary_rotation = boundary_rotation_number(H, 1024);
    report.boundary_mean_action = kPi * report.boundary_rotation;

    auto push_sorted_unique = [](std::vector<double>& vals, double v) {
        for (double w : vals) {
            if (std::fabs(w - v) <= 1e-8) return;
        }
        vals.push_back(v);
    };

    for (const auto& rec : report.orbits) {
        if (rec.period == 1) push_sorted_unique(report.spec_actions, rec.action_total);
        const bool interior = rec.location == OrbitLocation::Interior ||
                              (rec.location == OrbitLocation::DegenerateCircle &&
                               rec.circle_s < 1.0 - 1e-8);
        if (interior) {
            push_sorted_unique(report.interior_mean_spectrum_sample, rec.mean_action);
        }
    }
    if (!report.identity_periods.empty()) {
        // When some iterate is the identity, sigma of that iterate is constant
        // and every interior point realizes the same mean action.
        const double sigma0 = action_function(H, {0.0, 0.0}).sigma;
        push_sorted_unique(report.interior_mean_spectrum_sample, sigma0);
        if (report.identity_periods.front() == 1) {
            push_sorted_unique(report.spec_actions, sigma0);
        }
    }
    std::sort(report.spec_actions.begin(), report.spec_actions.end());
    std::sort(report.interior_mean_spectrum_sample.begin(),
              report.interior_mean_spectrum_sample.end());
    return report;
}

void write_orbits_csv(const SpectrumReport& report, std::ostream& os) {
    os << "x,y,period,residual,action,mean_action,location\n";
    for (const auto& rec : report.orbits) {
        const char* loc = rec.location == OrbitLocation::Interior ? "interior"
                          : rec.location == OrbitLocation::Boundary
                              ? "boundary"
                              : "degenerate_circle";
        os << rec.point.x << ',' << rec.point.y << ',' << rec.period << ','
           << rec.residual << ',' << rec.action_total << ',' << rec.mean_action << ','
           << loc << '\n';
    }
}

} // namespace discflow
