#pragma once

#include <array>

#include "spinorforge/spinor.hpp"

namespace spinorforge {

/// Momentum-space kinematics in natural units (hbar = c = 1).
struct Momentum {
    double m = 1.0;      // mass > 0
    double p_mag = 0.0;  // |p| >= 0
    double theta = 0.0;  // polar angle [0, pi]
    double phi = 0.0;    // azimuth [0, 2 pi)

    /// Validates m > 0 and p_mag >= 0; throws std::invalid_argument otherwise.
    static Momentum make(double m, double p_mag, double theta, double phi);
    static Momentum rest(double m, double theta = 0.0, double phi = 0.0);

    double energy() const; // sqrt(p^2 + m^2)
    std::array<double, 3> unit_direction() const;
    std::array<double, 3> vector3() const;

    bool same_as(const Momentum& other) const;
};

enum class ConjugacyType { self_conjugate, anti_self_conjugate };
enum class HelicityPair { minus_plus, plus_minus }; // {upper, lower} block helicities

const char* conjugacy_label(ConjugacyType t);  // "S" / "A"
const char* pair_label(HelicityPair p);        // "-+" / "+-"

/// Rest-frame helicity eigenspinor with the pinned phases:
///   + : sqrt(m) ( cos(theta/2) e^{-i phi/2},  sin(theta/2) e^{+i phi/2} )
///   - : sqrt(m) ( -sin(theta/2) e^{-i phi/2}, cos(theta/2) e^{+i phi/2} )
/// Throws std::invalid_argument for m <= 0 or sign not in {+1,-1}.
TwoSpinor rest_helicity_spinor(int sign, double theta, double phi, double m);

/// sigma_2 * conj(phi): the Wigner flip used to build the opposite-helicity block.
TwoSpinor wigner_flip(const TwoSpinor& phi);

/// A dual-helicity eigenspinor of the charge conjugation operator.
struct ElkoSpinor {
    DiracSpinor psi;
    ConjugacyType type = ConjugacyType::self_conjugate;
    HelicityPair pair = HelicityPair::minus_plus;
    Momentum momentum;
};

/// Rest-frame ELKO for the given conjugacy type and helicity pairing.
/// The upper block is s * sigma2 conj(phi_lower) with the sign s chosen so the
/// charge-conjugation eigenvalue matches the requested type (+1 self, -1 anti).
/// Requires momentum.p_mag == 0.
DiracSpinor elko_rest(ConjugacyType type, HelicityPair pair, const Momentum& rest_momentum);

/// Standard Weyl-representation pure boost, block diagonal:
/// right block gains (E + m + sigma.p)/sqrt(2m(E+m)), left block (E + m - sigma.p)/...
DiracSpinor boost(const DiracSpinor& psi, const Momentum& momentum);

/// Boosted ELKO at the given momentum; composition of elko_rest and boost.
ElkoSpinor elko(const Momentum& momentum, ConjugacyType type, HelicityPair pair);

/// All four type/pair combinations at one momentum.
struct ElkoFamily {
    ElkoSpinor self_mp, self_pm, anti_mp, anti_pm;
    Momentum momentum;

    const ElkoSpinor& member(ConjugacyType t, HelicityPair p) const;
};

ElkoFamily elko_family(const Momentum& momentum);

/// The ELKO dual row: +- i [partner with swapped pair, same type]^dagger gamma^0,
/// with + for the {-,+} spinor and - for the {+,-} spinor. The partner must be
/// present in `family` at the same momentum; otherwise throws MissingPartner.
SpinorRow elko_dual(const ElkoSpinor& lambda, const ElkoFamily& family);

/// dual . psi contraction; real for ELKO norms.
complexd dual_norm(const SpinorRow& dual, const DiracSpinor& psi);

} // namespace spinorforge
