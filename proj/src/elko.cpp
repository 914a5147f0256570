#include "spinorforge/elko.hpp"

#include <cmath>
#include <stdexcept>

#include "spinorforge/errors.hpp"

namespace spinorforge {

Momentum Momentum::make(double m, double p_mag, double theta, double phi) {
    if (!(m > 0.0)) throw std::invalid_argument("Momentum: mass must be positive");
    if (!(p_mag >= 0.0)) throw std::invalid_argument("Momentum: |p| must be nonnegative");
    return Momentum{m, p_mag, theta, phi};
}

Momentum Momentum::rest(double m, double theta, double phi) { return make(m, 0.0, theta, phi); }

double Momentum::energy() const { return std::sqrt(p_mag * p_mag + m * m); }

std::array<double, 3> Momentum::unit_direction() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::array<double, 3> Momentum::vector3() const {
    const auto n = unit_direction();
    return {p_mag * n[0], p_mag * n[1], p_mag * n[2]};
}

bool Momentum::same_as(const Momentum& other) const {
    return m == other.m && p_mag == other.p_mag && theta == other.theta && phi == other.phi;
}

const char* conjugacy_label(ConjugacyType t) {
    return t == ConjugacyType::self_conjugate ? "S" : "A";
}

const char* pair_label(HelicityPair p) { return p == HelicityPair::minus_plus ? "-+" : "+-"; }

TwoSpinor rest_helicity_spinor(int sign, double theta, double phi, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("rest_helicity_spinor: mass must be positive");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("rest_helicity_spinor: sign must be +1 or -1");
    const double rm = std::sqrt(m);
    const complexd lo = std::polar(1.0, -phi / 2.0);
    const complexd hi = std::polar(1.0, phi / 2.0);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    if (sign == 1) return {rm * c * lo, rm * s * hi};
    return {-rm * s * lo, rm * c * hi};
}

TwoSpinor wigner_flip(const TwoSpinor& phi) {
    // sigma2 * conj(phi)
    const complexd i{0.0, 1.0};
    return {-i * std::conj(phi[1]), i * std::conj(phi[0])};
}

DiracSpinor elko_rest(ConjugacyType type, HelicityPair pair, const Momentum& rest_momentum) {
    if (rest_momentum.p_mag != 0.0)
        throw std::invalid_argument("elko_rest: momentum must have p_mag == 0");
    const int lower_sign = pair == HelicityPair::minus_plus ? 1 : -1;
    const TwoSpinor lower =
        rest_helicity_spinor(lower_sign, rest_momentum.theta, rest_momentum.phi, rest_momentum.m);
    const TwoSpinor flipped = wigner_flip(lower);
    // The sign in front of the flipped block fixes the charge-conjugation
    // eigenvalue: with C = -gamma^2 K in this representation, the minus sign
    // yields the self-conjugate (+1) spinor and the plus sign the
    // anti-self-conjugate (-1) one.
    const double s = type == ConjugacyType::self_conjugate ? -1.0 : 1.0;
    return {{s * flipped[0], s * flipped[1], lower[0], lower[1]}};
}

DiracSpinor boost(const DiracSpinor& psi, const Momentum& momentum) {
    if (!(momentum.m > 0.0)) throw std::invalid_argument("boost: mass must be positive");
    const double e = momentum.energy();
    const double m = momentum.m;
    const double denom = std::sqrt(2.0 * m * (e + m));
    const auto p = momentum.vector3();
    // sigma.p
    const complexd off{p[0], -p[1]};
    const complexd a = (e + m + p[2]) / denom; // (E+m) I + sigma.p, entry (0,0)
    const complexd b = off / denom;
    const complexd c = std::conj(off) / denom;
    const complexd d = (e + m - p[2]) / denom;
    // Right block: ((E+m) + sigma.p)/denom; left block: ((E+m) - sigma.p)/denom.
    const TwoSpinor u = psi.upper();
    const TwoSpinor l = psi.lower();
    DiracSpinor r;
    r[0] = a * u[0] + b * u[1];
    r[1] = c * u[0] + d * u[1];
    r[2] = d * l[0] - b * l[1];
    r[3] = -c * l[0] + a * l[1];
    return r;
}

ElkoSpinor elko(const Momentum& momentum, ConjugacyType type, HelicityPair pair) {
    const Momentum rest = Momentum::rest(momentum.m, momentum.theta, momentum.phi);
    ElkoSpinor e;
    e.psi = boost(elko_rest(type, pair, rest), momentum);
    e.type = type;
    e.pair = pair;
    e.momentum = momentum;
    return e;
}

const ElkoSpinor& ElkoFamily::member(ConjugacyType t, HelicityPair p) const {
    if (t == ConjugacyType::self_conjugate)
        return p == HelicityPair::minus_plus ? self_mp : self_pm;
    return p == HelicityPair::minus_plus ? anti_mp : anti_pm;
}

ElkoFamily elko_family(const Momentum& momentum) {
    ElkoFamily f;
    f.self_mp = elko(momentum, ConjugacyType::self_conjugate, HelicityPair::minus_plus);
    f.self_pm = elko(momentum, ConjugacyType::self_conjugate, HelicityPair::plus_minus);
    f.anti_mp = elko(momentum, ConjugacyType::anti_self_conjugate, HelicityPair::minus_plus);
    f.anti_pm = elko(momentum, ConjugacyType::anti_self_conjugate, HelicityPair::plus_minus);
    f.momentum = momentum;
    return f;
}

SpinorRow elko_dual(const ElkoSpinor& lambda, const ElkoFamily& family) {
    if (!family.momentum.same_as(lambda.momentum))
        throw MissingPartner("elko_dual: family built at a different momentum");
    const HelicityPair swapped = lambda.pair == HelicityPair::minus_plus
                                     ? HelicityPair::plus_minus
                                     : HelicityPair::minus_plus;
    const ElkoSpinor& partner = family.member(lambda.type, swapped);
    if (!partner.momentum.same_as(lambda.momentum) || partner.type != lambda.type ||
        partner.pair != swapped)
        throw MissingPartner("elko_dual: swapped-pair partner not available");
    // +i for the {-,+} spinor, -i for the {+,-} spinor.
    const complexd sign =
        lambda.pair == HelicityPair::minus_plus ? complexd{0.0, 1.0} : complexd{0.0, -1.0};
    SpinorRow row = dirac_dual(partner.psi);
    for (auto& z : row) z *= sign;
    return row;
}

complexd dual_norm(const SpinorRow& dual, const DiracSpinor& psi) { return row_dot(dual, psi); }

} // namespace spinorforge
