#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "discflow/geometry.hpp"
#include "discflow/hamiltonian.hpp"

namespace discflow::testutil {

inline Vec2 fd_gradient(const Hamiltonian& H, double t, const Vec2& z, double h = 1e-5) {
    return {(H.value(t, {z.x + h, z.y}) - H.value(t, {z.x - h, z.y})) / (2.0 * h),
            (H.value(t, {z.x, z.y + h}) - H.value(t, {z.x, z.y - h})) / (2.0 * h)};
}

inline Loop circle_loop(double radius, int samples, bool ccw = true) {
    std::vector<Vec2> pts(samples);
    for (int i = 0; i < samples; ++i) {
        const double th = 2.0 * kPi * i / samples * (ccw ? 1.0 : -1.0);
        pts[i] = {radius * std::cos(th), radius * std::sin(th)};
    }
    return Loop(std::move(pts));
}

/// Sampled C^1 loop in the annulus [1, 1+delta]: Fourier-perturbed radius
/// with the amplitude capped so r stays in [1 + 0.05 delta, 1 + 0.95 delta],
/// winding `w` plus a small angular wobble.
inline Loop random_annulus_loop(std::mt19937& rng, double delta, int w, int samples) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    const int modes = 4;
    std::vector<double> amp(modes), ph(modes);
    double total = 0.0;
    for (int j = 0; j < modes; ++j) {
        amp[j] = unif(rng);
        ph[j] = phase(rng);
        total += std::fabs(amp[j]);
    }
    for (int j = 0; j < modes; ++j) amp[j] *= 0.45 / std::max(total, 1e-12);
    const double wobble = 0.25 * unif(rng);
    const double wph = phase(rng);

    std::vector<Vec2> pts(samples);
    for (int i = 0; i < samples; ++i) {
        const double tau = static_cast<double>(i) / samples;
        double u = 0.5;
        for (int j = 0; j < modes; ++j) u += amp[j] * std::cos(2.0 * kPi * (j + 1) * tau + ph[j]);
        const double r = 1.0 + delta * u;
        const double th = 2.0 * kPi * w * tau + wobble * std::sin(2.0 * kPi * tau + wph);
        pts[i] = {r * std::cos(th), r * std::sin(th)};
    }
    return Loop(std::move(pts));
}

inline Hamiltonian hill_poly() { return Hamiltonian::radial_poly({0.0, 4.0, -4.0}); }

inline Hamiltonian sample_perturbed(double amplitude, unsigned variant = 0) {
    std::vector<FourierTerm> terms;
    switch (variant % 3) {
        case 0:
            terms = {{amplitude, 1, 2, 0.3}, {0.6 * amplitude, 0, 1, 1.1}};
            break;
        case 1:
            terms = {{amplitude, 2, 3, 0.0}, {0.5 * amplitude, 1, 1, 2.0}};
            break;
        default:
            terms = {{amplitude, 1, 1, 0.7}, {0.4 * amplitude, 3, 2, 0.2}};
            break;
    }
    return Hamiltonian::perturbed({0.0, 4.0, -4.0}, std::move(terms));
}

} // namespace discflow::testutil
