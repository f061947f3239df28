#include <doctest.h>

#include <cmath>
#include <random>

#include "discflow/action.hpp"
#include "discflow/errors.hpp"
#include "test_util.hpp"

using namespace discflow;
using namespace discflow::testutil;

TEST_CASE("loop action closed forms") {
    SUBCASE("constant loop at the origin of a rotation has action pi*rho") {
        for (double rho : {0.25, 0.37, 0.8}) {
            const Hamiltonian H = Hamiltonian::rotation(rho);
            const OrbitTrace loop = integrate_orbit(H, {0.0, 0.0}, 1.0, 2000);
            CHECK(action_of_loop(H, loop) == doctest::Approx(kPi * rho).epsilon(1e-9));
        }
    }
    SUBCASE("zero Hamiltonian, constant loop") {
        const Hamiltonian H = Hamiltonian::zero();
        const OrbitTrace loop = integrate_orbit(H, {0.3, 0.2}, 1.0, 2000);
        CHECK(action_of_loop(H, loop) == doctest::Approx(0.0));
    }
    SUBCASE("circle orbit where g' = -pi matches the tangent intercept") {
        // 4(1 - 2s) = -pi at s = (4+pi)/8; intercept g - s g' = 4 s^2.
        const double s = (4.0 + kPi) / 8.0;
        const double expected = 4.0 * s * s;
        const Hamiltonian H = hill_poly();
        const OrbitTrace loop = integrate_orbit(H, {std::sqrt(s), 0.0}, 1.0, 16384);
        CHECK(action_of_loop(H, loop) == doctest::Approx(expected).epsilon(1e-6 / expected));
    }
    SUBCASE("open traces are rejected") {
        const Hamiltonian H = Hamiltonian::rotation(0.3);
        const OrbitTrace arc = integrate_orbit(H, {0.5, 0.0}, 1.0, 2000);
        CHECK_THROWS_AS(action_of_loop(H, arc), NotClosedError);
    }
}

TEST_CASE("action function") {
    SUBCASE("rotation: sigma is constant pi*rho") {
        const Hamiltonian H = Hamiltonian::rotation(0.37);
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> unif(-0.99, 0.99);
        double lo = 1e300, hi = -1e300;
        for (int c = 0; c < 100; ++c) {
            const Vec2 z{unif(rng), unif(rng)};
            if (z.norm() > 0.999) continue;
            const double s = action_function(H, z).sigma;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        CHECK(hi - lo <= 1e-8);
        CHECK(lo == doctest::Approx(kPi * 0.37).epsilon(1e-8));
    }
    SUBCASE("hill profile boundary value is 4") {
        const Hamiltonian H = hill_poly();
        const ActionSample bs = action_function(H, {1.0, 0.0});
        CHECK(bs.route == ActionRoute::BoundaryAnchored);
        CHECK(bs.sigma == doctest::Approx(4.0).epsilon(1e-9));
    }
    SUBCASE("zero Hamiltonian vanishes everywhere") {
        const Hamiltonian H = Hamiltonian::zero();
        CHECK(action_function(H, {0.4, -0.2}).sigma == doctest::Approx(0.0));
        CHECK(action_function(H, {1.0, 0.0}).sigma == doctest::Approx(0.0));
    }
    SUBCASE("outside the disc is rejected") {
        CHECK_THROWS_AS(action_function(hill_poly(), {1.2, 0.0}), OutsideDiscError);
    }
    SUBCASE("boundary condition: both routes agree on 64 boundary points") {
        for (const auto& H : {hill_poly(), Hamiltonian::rotation(0.41), sample_perturbed(0.05)}) {
            for (int i = 0; i < 64; ++i) {
                const double th = 2.0 * kPi * i / 64;
                const Vec2 z{std::cos(th), std::sin(th)};
                const double anchored = action_function(H, z).sigma;
                // Independent route: the full 2-D flow accumulates the same
                // line integral of lambda_0 along the boundary orbit.
                FlowOptions opts;
                opts.steps_per_unit = 2000;
                const double path = flow_map(H, z, 1.0, opts).action;
                CHECK(std::fabs(anchored - path) <= 1e-7);
            }
        }
    }
    SUBCASE("sigma at fixed points equals the loop action") {
        const Hamiltonian H = hill_poly();
        const double r = std::sqrt(0.5);
        for (const Vec2& p : {Vec2{0.0, 0.0}, Vec2{r, 0.0}, Vec2{-r * 0.6, r * 0.8}}) {
            const OrbitTrace loop = integrate_orbit(H, p, 1.0, 4000);
            REQUIRE(loop.closed(1e-8));
            CHECK(std::fabs(action_function(H, p).sigma - action_of_loop(H, loop)) <= 1e-6);
        }
    }
}

TEST_CASE("sigma solves d sigma = phi^* lambda_0 - lambda_0") {
    CHECK(verify_sigma_pde(Hamiltonian::rotation(0.5), 16) <= 1e-5);
    CHECK(verify_sigma_pde(Hamiltonian::zero(), 8) <= 1e-9);
    CHECK(verify_sigma_pde(sample_perturbed(0.03), 12) <= 1e-4);
    CHECK(verify_sigma_pde(hill_poly(), 16) <= 1e-4);
}

TEST_CASE("calabi invariants") {
    SUBCASE("rotation closed forms") {
        const double rho = 0.37;
        const Hamiltonian H = Hamiltonian::rotation(rho);
        CHECK(calabi(H, CalabiMethod::TimeSpace) ==
              doctest::Approx(kPi * kPi * rho / 2.0).epsilon(1e-8));
        CHECK(calabi(H, CalabiMethod::SigmaAverage) ==
              doctest::Approx(kPi * kPi * rho).epsilon(1e-8));
    }
    SUBCASE("hill profile closed forms") {
        const Hamiltonian H = hill_poly();
        CHECK(calabi(H, CalabiMethod::TimeSpace) ==
              doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-8));
        // int (g - s g') ds = int 4 s^2 ds = 4/3, times pi.
        CHECK(calabi(H, CalabiMethod::SigmaAverage) ==
              doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-7));
    }
    SUBCASE("zero Hamiltonian") {
        CHECK(calabi(Hamiltonian::zero(), CalabiMethod::TimeSpace) == doctest::Approx(0.0));
        CHECK(calabi(Hamiltonian::zero(), CalabiMethod::SigmaAverage) ==
              doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("time-space calabi is additive for radial sums") {
        const Hamiltonian a = hill_poly();
        const Hamiltonian b = Hamiltonian::radial_poly({0.0, -2.0, 1.0, 1.0});
        const double sum = calabi(add_radial(a, b), CalabiMethod::TimeSpace);
        const double parts =
            calabi(a, CalabiMethod::TimeSpace) + calabi(b, CalabiMethod::TimeSpace);
        CHECK(sum == doctest::Approx(parts).epsilon(1e-10));
    }
}

TEST_CASE("primitive shift lambda_0 -> lambda_0 + df") {
    SUBCASE("constant f changes nothing") {
        auto f = [](Vec2) { return 2.5; };
        auto df = [](Vec2) { return Vec2{0.0, 0.0}; };
        const auto rep = primitive_shift_test(Hamiltonian::rotation(0.3), f, df,
                                              {{0.2, 0.1}, {0.0, 0.0}, {-0.5, 0.4}});
        for (const auto& row : rep.rows) CHECK(std::fabs(row.delta_sigma) <= 1e-12);
    }
    SUBCASE("f = x leaves the fixed origin unchanged") {
        auto f = [](Vec2 z) { return z.x; };
        auto df = [](Vec2) { return Vec2{1.0, 0.0}; };
        const auto rep =
            primitive_shift_test(Hamiltonian::rotation(0.3), f, df,
                                 {{0.0, 0.0}, {0.5, 0.0}, {0.0, -0.7}});
        CHECK(rep.max_fixed_deviation <= 1e-6);
        CHECK(rep.max_nonfixed_deviation <= 1e-6);
        CHECK(rep.rows[0].fixed_point);
        CHECK_FALSE(rep.rows[1].fixed_point);
    }
    SUBCASE("f = x*y on the fixed circle of the hill profile") {
        auto f = [](Vec2 z) { return z.x * z.y; };
        auto df = [](Vec2 z) { return Vec2{z.y, z.x}; };
        const double r = std::sqrt(0.5);
        const auto rep = primitive_shift_test(hill_poly(), f, df,
                                              {{r, 0.0},
                                               {r * std::cos(2.0), r * std::sin(2.0)},
                                               {0.3, 0.1}});
        CHECK(rep.rows[0].fixed_point);
        CHECK(rep.rows[1].fixed_point);
        CHECK(rep.max_fixed_deviation <= 1e-6);
        CHECK(rep.max_nonfixed_deviation <= 1e-6);
    }
}
