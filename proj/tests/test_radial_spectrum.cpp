#include <doctest.h>

#include <cmath>

#include "discflow/action.hpp"
#include "discflow/radial_spectrum.hpp"
#include "discflow/spectrum.hpp"
#include "test_util.hpp"

using namespace discflow;
using namespace discflow::testutil;

TEST_CASE("tangent spectrum of the hill profile") {
    const Hamiltonian H = hill_poly();
    const TangentSpectrum spec = tangent_spectrum(H.profile(), 2);
    REQUIRE(spec.levels.size() == 3);
    CHECK(spec.origin_value == doctest::Approx(0.0));
    CHECK(spec.boundary_values.empty());  // g'(1) = -4 is not in pi*Z

    // Re-derived closed forms: 4(1-2s) = -+pi, intercept 4 s^2.
    const double s_lo = (4.0 - kPi) / 8.0;
    const double s_hi = (4.0 + kPi) / 8.0;
    CHECK(spec.levels[0].s == doctest::Approx(s_lo).epsilon(1e-10));
    CHECK(spec.levels[0].slope_index == -1);
    CHECK(spec.levels[0].value == doctest::Approx(4.0 * s_lo * s_lo).epsilon(1e-10));
    CHECK(spec.levels[1].s == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(spec.levels[1].slope_index == 0);
    CHECK(spec.levels[1].value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spec.levels[2].s == doctest::Approx(s_hi).epsilon(1e-10));
    CHECK(spec.levels[2].slope_index == 1);
    CHECK(spec.levels[2].value == doctest::Approx(4.0 * s_hi * s_hi).epsilon(1e-10));

    // Quoted reference triple at the coarse tolerance.
    CHECK(std::fabs(spec.levels[0].value - 0.04606) <= 1e-4);
    CHECK(std::fabs(spec.levels[1].value - 1.0) <= 1e-4);
    CHECK(std::fabs(spec.levels[2].value - 3.18758) <= 1e-4);
}

TEST_CASE("tangent values are reproduced by the dynamics oracle") {
    // The closed form (this module) against the integrated loop action.
    const Hamiltonian H = hill_poly();
    const TangentSpectrum spec = tangent_spectrum(H.profile(), 2);
    for (const auto& lv : spec.levels) {
        const Vec2 z0{std::sqrt(lv.s), 0.0};
        const double speed = std::fabs(2.0 * H.profile().dg(lv.s));
        const int steps = std::max(16384, static_cast<int>(4000 * speed));
        const OrbitTrace loop = integrate_orbit(H, z0, 1.0, steps);
        REQUIRE(loop.closed(1e-7));
        CHECK(std::fabs(action_of_loop(H, loop) - lv.value) <= 1e-6);
    }
}

TEST_CASE("rotation profiles") {
    SUBCASE("non-integer rho has no interior levels") {
        const Hamiltonian H = Hamiltonian::rotation(0.6);
        const TangentSpectrum spec = tangent_spectrum(H.profile(), 3);
        CHECK(spec.levels.empty());
        CHECK(spec.origin_value == doctest::Approx(kPi * 0.6));
    }
    SUBCASE("integer rho makes every level a plateau with value pi*rho") {
        const Hamiltonian H = Hamiltonian::rotation(2.0);
        const TangentSpectrum spec = tangent_spectrum(H.profile(), 3);
        REQUIRE(spec.levels.size() == 1);
        CHECK(spec.levels[0].plateau);
        CHECK(spec.levels[0].slope_index == 2);
        CHECK(spec.levels[0].value == doctest::Approx(2.0 * kPi).epsilon(1e-10));
        REQUIRE(spec.boundary_values.size() == 1);
        CHECK(spec.boundary_values[0] == doctest::Approx(2.0 * kPi).epsilon(1e-10));
    }
    SUBCASE("zero profile has the single value 0") {
        const Hamiltonian H = Hamiltonian::zero();
        const TangentSpectrum spec = tangent_spectrum(H.profile(), 2);
        const auto vals = spec.all_values();
        REQUIRE(vals.size() == 1);
        CHECK(vals[0] == doctest::Approx(0.0));
    }
}

TEST_CASE("adding a full twist shifts slope indices") {
    const Hamiltonian H = hill_poly();
    // precompose_rotation(H, -1) adds pi*(1-s): slope indices shift by +1 and
    // the boundary picks up one extra turn.
    const Hamiltonian twisted = precompose_rotation(H, -1);
    const TangentSpectrum a = tangent_spectrum(H.profile(), 4);
    const TangentSpectrum b = tangent_spectrum(twisted.profile(), 4);
    REQUIRE(a.levels.size() == b.levels.size());
    for (const auto& la : a.levels) {
        bool matched = false;
        for (const auto& lb : b.levels) {
            if (std::fabs(la.s - lb.s) <= 1e-9 && lb.slope_index == la.slope_index + 1) {
                matched = true;
            }
        }
        CHECK(matched);
    }
    CHECK(boundary_rotation_number(twisted, 1000) ==
          doctest::Approx(boundary_rotation_number(H, 1000) + 1.0).epsilon(1e-6));
}

TEST_CASE("staircase gap certificate") {
    SUBCASE("lambda = 0: minimum positive value is the bump height") {
        const GapCertificate cert = staircase_gap_certificate(0.0, 0.1, 0.5);
        CHECK(cert.gap_holds);
        CHECK(cert.min_positive == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("lambda = -1 keeps the gap") {
        CHECK(staircase_gap_certificate(-1.0, 0.1, 0.5).gap_holds);
    }
    SUBCASE("sweep over lambda") {
        for (double lambda : {0.0, -0.25, -0.5, -0.75, -1.0, -1.5, -2.0}) {
            CHECK(staircase_gap_certificate(lambda, 0.1, 1.0).gap_holds);
        }
    }
}

TEST_CASE("rotation spectral invariants") {
    SUBCASE("pinned examples") {
        const auto a = rotation_spectral_invariants(0.5);
        CHECK(a.c_plus == doctest::Approx(0.5 * kPi));
        CHECK(a.c_minus == doctest::Approx(0.0));
        const auto b = rotation_spectral_invariants(2.0);
        CHECK(b.c_plus == doctest::Approx(kPi));
        CHECK(b.c_minus == doctest::Approx(0.0));
        const auto c = rotation_spectral_invariants(0.0);
        CHECK(c.c_plus == doctest::Approx(0.0));
        CHECK(c.c_minus == doctest::Approx(0.0));
        CHECK(!a.derivation.empty());
    }
    SUBCASE("duality, sign normalization, gamma bound") {
        for (int i = -40; i <= 40; ++i) {
            const double rho = i / 10.0;
            const auto inv = rotation_spectral_invariants(rho);
            const auto mir = rotation_spectral_invariants(-rho);
            CHECK(inv.c_plus == doctest::Approx(-mir.c_minus).epsilon(1e-15));
            CHECK(inv.c_minus <= 0.0);
            CHECK(inv.c_plus >= 0.0);
            CHECK(inv.c_plus - inv.c_minus <= kPi + 1e-15);
        }
    }
}

TEST_CASE("rotation subadditivity") {
    CHECK(subadditivity_check_rotations(0.4, 0.4));
    CHECK(subadditivity_check_rotations(0.9, 0.9));
    CHECK(subadditivity_check_rotations(-0.5, 0.5));
    for (int i = -20; i <= 20; i += 3) {
        for (int j = -20; j <= 20; j += 3) {
            CHECK(subadditivity_check_rotations(i / 10.0, j / 10.0));
        }
    }
}

TEST_CASE("monotonicity of pinned c+ values") {
    SUBCASE("rotations") {
        const auto rep = monotonicity_check_radial(Hamiltonian::rotation(0.6),
                                                   Hamiltonian::rotation(0.4));
        CHECK(rep.hypothesis_ok);
        CHECK(rep.status == MonotonicityStatus::Consistent);
        CHECK(rep.c1_lo == doctest::Approx(0.6 * kPi));
        CHECK(rep.c2_hi == doctest::Approx(0.4 * kPi));
    }
    SUBCASE("staircase dominates the zero family") {
        const auto rep = monotonicity_check_radial(Hamiltonian::staircase(0.0, 0.1, 1.0),
                                                   Hamiltonian::zero());
        CHECK(rep.hypothesis_ok);
        CHECK(rep.status == MonotonicityStatus::Consistent);
        CHECK(rep.c1_lo == doctest::Approx(1.0));
    }
    SUBCASE("equal profiles are trivially consistent") {
        const auto rep = monotonicity_check_radial(Hamiltonian::rotation(0.3),
                                                   Hamiltonian::rotation(0.3));
        CHECK(rep.status == MonotonicityStatus::Consistent);
    }
    SUBCASE("unpinned pairs are reported, not guessed") {
        const auto rep = monotonicity_check_radial(
            Hamiltonian::radial_poly({0.0, 4.0, -4.0}),
            Hamiltonian::radial_poly({0.0, 2.0, -2.0}));
        CHECK(rep.hypothesis_ok);
        CHECK(rep.status == MonotonicityStatus::Indeterminate);
    }
}
