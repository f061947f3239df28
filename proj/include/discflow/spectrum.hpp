#pragma once

#include <iosfwd>
#include <vector>

#include "discflow/action.hpp"
#include "discflow/flow.hpp"
#include "discflow/hamiltonian.hpp"

namespace discflow {

enum class OrbitLocation { Interior, Boundary, DegenerateCircle };

struct OrbitRecord {
    Vec2 point;            // representative point of the orbit
    int period{1};         // minimal period k
    double residual{0.0};  // |phi^k(z) - z|, re-verified at double resolution
    double action_total{0.0};  // sigma of the k-th iterate at the point
    double mean_action{0.0};   // action_total / k
    OrbitLocation location{OrbitLocation::Interior};
    double circle_s{0.0};  // s-level for DegenerateCircle records
};

struct SeedSpec {
    int grid{24};                  // lattice resolution (grid x grid over the disc)
    double max_radius{0.97};
    bool resonance_guided{true};   // ring seeds at base-profile resonances
    int ring_seeds{48};
    bool lattice_every_period{false};
    int newton_max_iter{30};
    int search_steps_per_unit{500};
    int polish_steps_per_unit{2000};
};

struct SpectrumReport {
    std::vector<OrbitRecord> orbits;
    int period_cutoff{1};
    std::vector<double> spec_actions;                   // period-1 actions
    std::vector<double> interior_mean_spectrum_sample;  // sorted sample
    double boundary_rotation{0.0};
    double boundary_mean_action{0.0};  // area * rho with area = pi
    std::vector<int> identity_periods; // k with phi^k = id on a probe grid
    int dropped_seeds{0};
};

/// Periodic orbits of the time-one map up to period K. Radial families are
/// solved exactly in s (resonant circles of g'(s) in pi*Q) and merged with a
/// small Newton cross-check; other families run damped Newton on
/// phi^k(z) - z from the seed lattice (plus resonance-guided rings for
/// perturbed families). Non-convergent seeds are dropped and counted.
std::vector<OrbitRecord> find_periodic_orbits(const Hamiltonian& H, int K,
                                              const SeedSpec& seeds = {},
                                              int* dropped = nullptr,
                                              std::vector<int>* identity_periods = nullptr);

/// Rotation number of the boundary circle dynamics from the lifted angle
/// over `iterates` periods; Richardson-extrapolated when `refine` is set.
double boundary_rotation_number(const Hamiltonian& H, int iterates, bool refine = true);

/// Birkhoff average (1/N) sum_j sigma(phi^j(z)). Since sigma accumulates the
/// action integrand over one period, this is the integrand averaged over
/// [0, N] along the single orbit through z.
double birkhoff_mean_action(const Hamiltonian& H, const Vec2& z, int N,
                            int steps_per_unit = 2000);

SpectrumReport interior_mean_spectrum(const Hamiltonian& H, int K,
                                      const SeedSpec& seeds = {});

/// CSV rows: x, y, period, residual, action, mean_action, location.
void write_orbits_csv(const SpectrumReport& report, std::ostream& os);

} // namespace discflow
