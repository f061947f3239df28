#include <doctest.h>

#include <cmath>
#include <random>

#include "discflow/errors.hpp"
#include "discflow/flow.hpp"
#include "discflow/geometry.hpp"
#include "test_util.hpp"

using namespace discflow;
using namespace discflow::testutil;

TEST_CASE("rigid rotations integrate exactly") {
    SUBCASE("quarter rotation") {
        const Vec2 end = time_one_map(Hamiltonian::rotation(0.25), {1.0, 0.0});
        CHECK(std::fabs(end.x - 0.0) <= 1e-8);
        CHECK(std::fabs(end.y - 1.0) <= 1e-8);
    }
    SUBCASE("full rotation is the identity") {
        const Vec2 z0{0.3, -0.6};
        const Vec2 end = time_one_map(Hamiltonian::rotation(1.0), z0);
        CHECK((end - z0).norm() <= 1e-8);
    }
    SUBCASE("half rotation") {
        const Vec2 end = time_one_map(Hamiltonian::rotation(0.5), {0.5, 0.0});
        CHECK((end - Vec2{-0.5, 0.0}).norm() <= 1e-8);
    }
}

TEST_CASE("hill profile fixed sets") {
    const double r = std::sqrt(0.5);
    const Vec2 z0{r * std::cos(1.1), r * std::sin(1.1)};
    CHECK((time_one_map(hill_poly(), z0) - z0).norm() <= 1e-8);
    CHECK((time_one_map(hill_poly(), {0.0, 0.0}) - Vec2{0.0, 0.0}).norm() <= 1e-12);
}

TEST_CASE("boundary circle is invariant") {
    for (const auto& H : {Hamiltonian::rotation(0.4), hill_poly(), sample_perturbed(0.05)}) {
        for (int i = 0; i < 8; ++i) {
            const double th = 2.0 * kPi * i / 8;
            const OrbitTrace trace = integrate_orbit(H, {std::cos(th), std::sin(th)}, 1.0, 2000);
            for (const auto& p : trace.points) {
                CHECK(std::fabs(p.norm() - 1.0) <= 1e-7);
            }
        }
    }
}

TEST_CASE("energy conservation for autonomous families") {
    for (const auto& H : {hill_poly(), Hamiltonian::staircase(-1.0, 0.1, 0.5)}) {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> unif(-0.9, 0.9);
        for (int c = 0; c < 10; ++c) {
            const Vec2 z0{unif(rng), unif(rng)};
            const double e0 = H.value(0.0, z0);
            const OrbitTrace trace = integrate_orbit(H, z0, 1.0, 2000);
            for (std::size_t i = 0; i < trace.points.size(); i += 100) {
                CHECK(std::fabs(H.value(0.0, trace.points[i]) - e0) <= 1e-7);
            }
        }
    }
}

TEST_CASE("area preservation on advected triangles") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(-0.7, 0.7);
    // Triangles small enough that the map is linear across them to 1e-5.
    for (const auto& H : {Hamiltonian::rotation(0.37), hill_poly(), sample_perturbed(0.05)}) {
        for (int c = 0; c < 10; ++c) {
            const Vec2 a{unif(rng), unif(rng)};
            const Vec2 b = a + Vec2{1e-7, 0.0};
            const Vec2 d = a + Vec2{0.0, 1e-7};
            const Vec2 fa = time_one_map(H, a);
            const Vec2 fb = time_one_map(H, b);
            const Vec2 fd = time_one_map(H, d);
            const double area0 = 0.5 * (b - a).cross(d - a);
            const double area1 = 0.5 * (fb - fa).cross(fd - fa);
            CHECK(area1 / area0 == doctest::Approx(1.0).epsilon(1e-5));
        }
    }
}

TEST_CASE("flow jacobian") {
    SUBCASE("rotation linearizes to the rotation matrix") {
        const double rho = 0.3;
        const Mat2 J = flow_jacobian(Hamiltonian::rotation(rho), {0.2, 0.5}, 1.0);
        const Mat2 R = Mat2::rotation(2.0 * kPi * rho);
        CHECK((J - R).max_abs() <= 1e-6);
    }
    SUBCASE("zero Hamiltonian gives the identity") {
        const Mat2 J = flow_jacobian(Hamiltonian::zero(), {0.4, -0.1}, 1.0);
        CHECK((J - Mat2::identity()).max_abs() <= 1e-12);
    }
    SUBCASE("determinant is 1 and matches finite differences of the flow") {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> unif(-0.8, 0.8);
        for (const auto& H : {hill_poly(), sample_perturbed(0.05)}) {
            for (int c = 0; c < 8; ++c) {
                const Vec2 z{unif(rng), unif(rng)};
                const Mat2 J = flow_jacobian(H, z, 1.0);
                CHECK(std::fabs(J.det() - 1.0) <= 1e-6);
                const double h = 1e-5;
                const Vec2 fxp = time_one_map(H, {z.x + h, z.y});
                const Vec2 fxm = time_one_map(H, {z.x - h, z.y});
                const Vec2 fyp = time_one_map(H, {z.x, z.y + h});
                const Vec2 fym = time_one_map(H, {z.x, z.y - h});
                const Mat2 FD{(fxp.x - fxm.x) / (2 * h), (fyp.x - fym.x) / (2 * h),
                              (fxp.y - fxm.y) / (2 * h), (fyp.y - fym.y) / (2 * h)};
                CHECK((J - FD).max_abs() <= 1e-4);
            }
        }
    }
}

TEST_CASE("trace structure and integration diagnostics") {
    const OrbitTrace trace = integrate_orbit(hill_poly(), {0.6, 0.1}, 1.0, 2000);
    CHECK(trace.action.front() == 0.0);
    CHECK(trace.points.size() == 2001);
    for (std::size_t i = 1; i < trace.points.size(); ++i) {
        CHECK((trace.points[i] - trace.points[i - 1]).norm() < 0.05);
    }
    CHECK(trace.has_angle_lift);
    CHECK(flow_richardson_error(hill_poly(), {0.6, 0.1}, 1.0) <= 1e-10);

    CHECK_THROWS_AS(integrate_orbit(hill_poly(), {0.5, 0.0}, 1.0, 50), Error);
    CHECK_THROWS_AS(flow_map(hill_poly(), {3.5, 0.0}, 1.0), StepRejectionError);
}

TEST_CASE("mollified rotation slows down in the collar") {
    const Hamiltonian Hn = build_mollified(Hamiltonian::rotation(0.5), 16, true);
    const Vec2 z0{1.0 + 0.5 / 16.0, 0.0};
    const OrbitTrace trace = integrate_orbit(Hn, z0, 1.0, 2000);
    REQUIRE(trace.has_angle_lift);
    const double wind = (trace.angle_lift.back() - trace.angle_lift.front()) / (2.0 * kPi);
    CHECK(std::fabs(wind) < 0.5 + 1e-3);
    for (const auto& p : trace.points) {
        CHECK(p.norm() >= 1.0 - 1e-9);
        CHECK(p.norm() <= 1.0 + 1.0 / 16.0 + 1e-9);
    }
}
