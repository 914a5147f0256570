#include "spinorforge/sampling.hpp"

#include <cmath>

namespace spinorforge {

complexd random_complex(SplitMix64& rng) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    return {re, im};
}

DiracSpinor random_spinor(SplitMix64& rng) {
    DiracSpinor psi;
    for (int k = 0; k < 4; ++k) psi[k] = random_complex(rng);
    return psi;
}

DiracSpinor random_unit_spinor(SplitMix64& rng) { return random_spinor(rng).normalized(); }

DiracSpinor random_class2_spinor(SplitMix64& rng, bool normalize_sigma) {
    // Real components make chi vanish identically; generic real spinors carry
    // sigma != 0 with J, K, S all nonzero.
    for (int attempt = 0; attempt < 64; ++attempt) {
        DiracSpinor psi;
        for (int k = 0; k < 4; ++k) psi[k] = complexd{rng.gaussian(), 0.0};
        const complexd ul = std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3];
        const double sigma = 2.0 * ul.real();
        if (std::abs(sigma) < 1e-3) continue;
        if (!normalize_sigma) return psi;
        if (sigma < 0.0) {
            psi[2] = -psi[2];
            psi[3] = -psi[3];
        }
        const double scale = 1.0 / std::sqrt(std::abs(sigma));
        return complexd{scale, 0.0} * psi;
    }
    return DiracSpinor{{1.0, 0.0, 1.0, 0.0}}; // sigma = 2 fallback, rescaled below if needed
}

DiracSpinor random_class3_spinor(SplitMix64& rng, bool normalize_chi) {
    // (u, i s l) with real u, l and s = +-1: sigma = 0 identically while
    // chi = 2 Im(u^dag (i s l)) = 2 s (u.l).
    for (int attempt = 0; attempt < 64; ++attempt) {
        DiracSpinor psi;
        double u[2], l[2];
        for (int k = 0; k < 2; ++k) u[k] = rng.gaussian();
        for (int k = 0; k < 2; ++k) l[k] = rng.gaussian();
        const double dot = u[0] * l[0] + u[1] * l[1];
        if (std::abs(dot) < 1e-3) continue;
        const double s = (normalize_chi && dot < 0.0) ? -1.0 : 1.0;
        psi[0] = complexd{u[0], 0.0};
        psi[1] = complexd{u[1], 0.0};
        psi[2] = complexd{0.0, s * l[0]};
        psi[3] = complexd{0.0, s * l[1]};
        if (!normalize_chi) return psi;
        const double scale = 1.0 / std::sqrt(2.0 * std::abs(dot)); // chi -> 1
        return complexd{scale, 0.0} * psi;
    }
    return DiracSpinor{{complexd{std::sqrt(0.5), 0.0}, 0.0, complexd{0.0, std::sqrt(0.5)}, 0.0}};
}

DiracSpinor random_class4_spinor(SplitMix64& rng) {
    // Project the lower block orthogonal to the upper: sigma = chi = 0 while
    // K and S stay generically nonzero.
    for (int attempt = 0; attempt < 64; ++attempt) {
        const TwoSpinor u = {random_complex(rng), random_complex(rng)};
        TwoSpinor l = {random_complex(rng), random_complex(rng)};
        const double usq = std::norm(u[0]) + std::norm(u[1]);
        if (usq < 1e-6) continue;
        const complexd overlap = (std::conj(u[0]) * l[0] + std::conj(u[1]) * l[1]) / usq;
        l[0] -= overlap * u[0];
        l[1] -= overlap * u[1];
        const double lsq = std::norm(l[0]) + std::norm(l[1]);
        if (lsq < 1e-6) continue;
        return DiracSpinor{{u[0], u[1], l[0], l[1]}};
    }
    return DiracSpinor{{1.0, 0.0, 0.0, 1.0}};
}

DiracSpinor random_flagpole_spinor(SplitMix64& rng) {
    const TwoSpinor phi = {random_complex(rng), random_complex(rng)};
    const TwoSpinor flipped = wigner_flip(phi);
    const complexd eps = std::polar(1.0, 6.283185307179586 * rng.next_double());
    return DiracSpinor{{eps * flipped[0], eps * flipped[1], phi[0], phi[1]}};
}

DiracSpinor random_weyl_spinor(SplitMix64& rng) {
    const bool left = rng.next_double() < 0.5;
    const TwoSpinor phi = {random_complex(rng), random_complex(rng)};
    if (left) return DiracSpinor{{0.0, 0.0, phi[0], phi[1]}};
    return DiracSpinor{{phi[0], phi[1], 0.0, 0.0}};
}

Momentum random_momentum(SplitMix64& rng) {
    const double m = 0.25 + 4.75 * rng.next_double();
    const double p = 5.0 * rng.next_double();
    const double theta = 3.14159265358979323846 * rng.next_double();
    const double phi = 6.283185307179586 * rng.next_double();
    return Momentum::make(m, p, theta, phi);
}

CurvatureSample random_curvature(SplitMix64& rng) {
    CurvatureSample omega;
    for (auto& slot : omega.slots)
        for (int m : kTwoFormMasks) slot[m] = rng.gaussian();
    return omega;
}

TorsionSample random_torsion(SplitMix64& rng) {
    TorsionSample t;
    for (auto& slot : t.slots)
        for (int m : kTwoFormMasks) slot[m] = rng.gaussian();
    return t;
}

} // namespace spinorforge
