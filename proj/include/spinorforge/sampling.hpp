#pragma once

#include "spinorforge/elko.hpp"
#include "spinorforge/forms.hpp"
#include "spinorforge/rng.hpp"
#include "spinorforge/spinor.hpp"

namespace spinorforge {

// Deterministic sample generators shared by the verification suites and tests.
// Spinor components are i.i.d. standard complex Gaussians unless stated.

complexd random_complex(SplitMix64& rng);
DiracSpinor random_spinor(SplitMix64& rng);
DiracSpinor random_unit_spinor(SplitMix64& rng);

/// Class-2 generator: real Gaussian components (chi vanishes identically),
/// rescaled so sigma = 1 when normalize_sigma is set.
DiracSpinor random_class2_spinor(SplitMix64& rng, bool normalize_sigma);

/// Class-3 generator: lower block rotated by i against a real spinor
/// (sigma vanishes identically), rescaled so chi = 1 when normalize_chi is set.
DiracSpinor random_class3_spinor(SplitMix64& rng, bool normalize_chi);

/// Class-4 generator: lower block projected orthogonal to the upper block.
DiracSpinor random_class4_spinor(SplitMix64& rng);

/// Class-5 generator: flagpole (eps sigma2 conj(phi), phi) with random unimodular eps.
DiracSpinor random_flagpole_spinor(SplitMix64& rng);

/// Class-6 generator: pure single-handed (Weyl) spinor.
DiracSpinor random_weyl_spinor(SplitMix64& rng);

Momentum random_momentum(SplitMix64& rng);      // m in [0.25, 5], |p| in [0, 5]
CurvatureSample random_curvature(SplitMix64& rng);
TorsionSample random_torsion(SplitMix64& rng);

} // namespace spinorforge
