#include <doctest.h>

#include <random>

#include "discflow/errors.hpp"
#include "discflow/geometry.hpp"
#include "test_util.hpp"

using namespace discflow;
using namespace discflow::testutil;

TEST_CASE("liouville pairing closed forms") {
    CHECK(liouville_pairing({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(0.5));
    CHECK(liouville_pairing({0.0, 0.0}, {3.0, -2.0}) == doctest::Approx(0.0));
    CHECK(liouville_pairing({0.0, 2.0}, {1.0, 0.0}) == doctest::Approx(-1.0));
}

TEST_CASE("loop length converges to circle circumference") {
    CHECK(loop_length(circle_loop(1.0, 10000)) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    CHECK(loop_length(circle_loop(1.1, 10000)) == doctest::Approx(2.2 * kPi).epsilon(1e-6));
    Loop constant(std::vector<Vec2>(16, Vec2{1.0, 0.0}));
    CHECK(loop_length(constant) == doctest::Approx(0.0));
}

TEST_CASE("winding number basics") {
    CHECK(winding_number(circle_loop(1.0, 512), {0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(winding_number(circle_loop(1.0, 512, false), {0.0, 0.0}) ==
          doctest::Approx(-1.0).epsilon(1e-9));
    Loop constant(std::vector<Vec2>(16, Vec2{1.0, 0.0}));
    CHECK(winding_number(constant, {0.0, 0.0}) == doctest::Approx(0.0));

    // Half-turn open arc on the unit circle.
    std::vector<Vec2> arc;
    for (int i = 0; i <= 256; ++i) {
        const double th = kPi * i / 256;
        arc.push_back({std::cos(th), std::sin(th)});
    }
    CHECK(winding_number(arc, {0.0, 0.0}, false) == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(winding_number(circle_loop(1.0, 512), {1.0, 0.0}), CenterOnLoopError);
    // Triple-wound circle on 8 samples: angular step 3*pi/4 > pi/2.
    std::vector<Vec2> coarse;
    for (int i = 0; i < 8; ++i) {
        const double th = 3.0 * 2.0 * kPi * i / 8;
        coarse.push_back({std::cos(th), std::sin(th)});
    }
    CHECK_THROWS_AS(winding_number(Loop(std::move(coarse)), {0.0, 0.0}),
                    SamplingTooCoarseError);
}

TEST_CASE("enclosed area: circles, reversal, figure-eight") {
    CHECK(enclosed_area(circle_loop(1.0, 10000)) == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(enclosed_area(circle_loop(1.0, 10000, false)) == doctest::Approx(-kPi).epsilon(1e-6));

    std::mt19937 rng(7);
    for (int c = 0; c < 20; ++c) {
        Loop loop = random_annulus_loop(rng, 0.3, 1 + (c % 3), 2048);
        const double a = enclosed_area(loop);
        const double b = enclosed_area(loop.reversed());
        CHECK(std::fabs(a + b) <= 1e-15 * std::max(1.0, std::fabs(a)));
    }

    // Symmetric figure-eight: the two lobes cancel exactly.
    std::vector<Vec2> eight;
    for (int i = 0; i < 4096; ++i) {
        const double tau = static_cast<double>(i) / 4096;
        eight.push_back({std::sin(4.0 * kPi * tau), std::sin(2.0 * kPi * tau)});
    }
    CHECK(enclosed_area(Loop(std::move(eight))) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("enclosed area equals the lambda_0 loop integral") {
    std::mt19937 rng(11);
    for (int c = 0; c < 10; ++c) {
        Loop loop = random_annulus_loop(rng, 0.4, 1, 10000);
        const double area = enclosed_area(loop);
        const double liou = loop_liouville_integral(loop);
        CHECK(std::fabs(area - liou) <= 1e-8 * std::max(1.0, std::fabs(area)));
    }
}

TEST_CASE("winding of closed sampled loops is near an integer") {
    std::mt19937 rng(23);
    for (int c = 0; c < 50; ++c) {
        const int w = (c % 5) - 2;
        const int samples = 4096;
        Loop loop = random_annulus_loop(rng, 0.5, w, samples);
        const double wind = winding_number(loop, {0.0, 0.0});
        CHECK(std::fabs(wind - std::round(wind)) <= 10.0 / samples);
        CHECK(static_cast<int>(std::round(wind)) == w);
    }
}

TEST_CASE("degree/length inequality") {
    SUBCASE("analytic circle case") {
        const double delta = 0.1;
        auto res = degree_length_check(circle_loop(1.1, 20000), delta);
        CHECK(res.lhs == doctest::Approx(kPi * (2.0 * delta + delta * delta)).epsilon(1e-6));
        CHECK(res.rhs == doctest::Approx(2.0 * kPi * 1.1 * delta).epsilon(1e-6));
        CHECK(res.holds);
    }
    SUBCASE("constant loop on the unit circle") {
        Loop constant(std::vector<Vec2>(16, Vec2{1.0, 0.0}));
        auto res = degree_length_check(constant, 0.05);
        CHECK(res.lhs == doctest::Approx(0.0));
        CHECK(res.rhs == doctest::Approx(0.0));
        CHECK(res.holds);
    }
    SUBCASE("rejects loops outside the annulus") {
        CHECK_THROWS_AS(degree_length_check(circle_loop(1.2, 512), 0.1), OutsideAnnulusError);
    }
    SUBCASE("randomized smooth loops") {
        std::mt19937 rng(101);
        for (int c = 0; c < 100; ++c) {
            const double delta = 0.05;
            const int w = (c % 5) - 2;
            Loop loop = random_annulus_loop(rng, delta, w, 16384);
            const double len = loop_length(loop);
            const double h = len / 16384;
            auto res = degree_length_check(loop, delta, 1e-6 + 20.0 * len * h * h);
            CHECK(res.holds);
        }
    }
}
