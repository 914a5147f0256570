#include "spinorforge/dsf_elko_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinorforge/errors.hpp"
#include "spinorforge/lounesto.hpp"

namespace spinorforge {

namespace {

complexd pairing(const DiracSpinor& psi, int i, int j) {
    // conj(psi_i) * psi_j with 1-based indices as printed.
    return std::conj(psi[i - 1]) * psi[j - 1];
}

} // namespace

std::array<double, 4> common_conditions(const DiracSpinor& psi) {
    return {pairing(psi, 1, 3).real(), pairing(psi, 2, 4).real(),
            pairing(psi, 2, 3).real() + pairing(psi, 1, 4).real(),
            pairing(psi, 1, 4).imag() - pairing(psi, 2, 3).imag() -
                2.0 * pairing(psi, 3, 4).imag() - 2.0 * pairing(psi, 1, 2).imag()};
}

namespace {

double ad2_residual(const DiracSpinor& psi) {
    return pairing(psi, 1, 4).real() + pairing(psi, 2, 3).imag();
}

double ad3_residual(const DiracSpinor& psi) {
    return pairing(psi, 1, 4).imag() - pairing(psi, 2, 3).imag() - 2.0 * pairing(psi, 1, 2).imag();
}

} // namespace

std::vector<double> class_conditions(const DiracSpinor& psi, int class_id) {
    switch (class_id) {
        case 1: return {ad2_residual(psi), ad3_residual(psi)};
        case 2: return {ad2_residual(psi)};
        case 3: return {ad3_residual(psi)};
        default: throw std::invalid_argument("class_conditions: class id must be 1, 2 or 3");
    }
}

MappingResiduals mapping_residuals(const DiracSpinor& psi) {
    MappingResiduals r;
    r.common = common_conditions(psi);
    r.class2_extra = ad2_residual(psi);

    // Component values psi_j = psi_ja + i psi_jb, as printed.
    const double a1 = psi[0].real(), b1 = psi[0].imag();
    const double a2 = psi[1].real(), b2 = psi[1].imag();
    const double a3 = psi[2].real(), b3 = psi[2].imag();
    const double a4 = psi[3].real(), b4 = psi[3].imag();

    const double row13_first = a2 * (a3 - b3) + b2 * (a3 + b3);
    const double im34 = a3 * b4 - b3 * a4;

    r.class3_extra = {ad3_residual(psi), row13_first};

    r.table1.row1 = {row13_first, im34};
    r.table1.row2 = {im34, a2 * a3 + b2 * b3 + a1 * a4 + b1 * b4};
    r.table1.row3 = {row13_first, (a1 * b4 - b1 * a4) - (a2 * b3 - b2 * a3) -
                                      2.0 * (a3 * b4 - b3 * a4) - 2.0 * (a1 * b2 - b1 * a2)};
    return r;
}

MappabilityDiagnostics is_mappable(const DiracSpinor& psi, int class_id, double tol) {
    if (class_id < 1 || class_id > 3)
        throw std::invalid_argument("is_mappable: class id must be 1, 2 or 3");
    if (psi.norm() <= tol) throw ZeroSpinor("is_mappable: spinor norm below tolerance");

    const DiracSpinor unit = psi.normalized();
    MappabilityDiagnostics d;
    const auto common = common_conditions(unit);
    d.residuals.assign(common.begin(), common.end());
    for (double extra : class_conditions(unit, class_id)) d.residuals.push_back(extra);
    for (double v : d.residuals) d.max_residual = std::max(d.max_residual, std::abs(v));

    try {
        d.observed_class = classify(unit, tol).class_id;
    } catch (const InconsistentCovariants&) {
        d.observed_class = 0;
    }
    d.mappable = d.max_residual < tol && d.observed_class == class_id;
    return d;
}

WeylBuildResult dsf_from_weyl(const TwoSpinor& phi_L, complexd epsilon, const Momentum& momentum) {
    const double n = std::sqrt(std::norm(phi_L[0]) + std::norm(phi_L[1]));
    if (!(n > 0.0)) throw std::invalid_argument("dsf_from_weyl: zero Weyl spinor");
    if (std::abs(std::abs(epsilon) - 1.0) > 1e-12)
        throw std::invalid_argument("dsf_from_weyl: epsilon must be unimodular");

    const TwoSpinor flipped = wigner_flip(phi_L);
    WeylBuildResult out;
    out.psi = {{epsilon * flipped[0], epsilon * flipped[1], phi_L[0], phi_L[1]}};

    // chi phi_L with chi = (E + sigma.p)/m in momentum space.
    const double e = momentum.energy();
    const auto p = momentum.vector3();
    const complexd off{p[0], -p[1]};
    const TwoSpinor dirac_upper = {((e + p[2]) * phi_L[0] + off * phi_L[1]) / momentum.m,
                                   (std::conj(off) * phi_L[0] + (e - p[2]) * phi_L[1]) /
                                       momentum.m};
    out.dirac_defect = std::sqrt(std::norm(epsilon * flipped[0] - dirac_upper[0]) +
                                 std::norm(epsilon * flipped[1] - dirac_upper[1]));
    return out;
}

ElkoSpinor elko_from_dsf(const DiracSpinor& psi, double tol) {
    if (psi.norm() <= tol) throw ZeroSpinor("elko_from_dsf: spinor norm below tolerance");

    const TwoSpinor lower = psi.lower();
    const TwoSpinor upper = psi.upper();
    const double lower_norm = std::sqrt(std::norm(lower[0]) + std::norm(lower[1]));
    if (lower_norm <= tol * psi.norm())
        throw NotMappable("elko_from_dsf: vanishing left-handed block");

    // Least-squares unimodular phase for upper = eps * sigma2 conj(lower).
    const TwoSpinor flipped = wigner_flip(lower);
    const complexd overlap =
        std::conj(flipped[0]) * upper[0] + std::conj(flipped[1]) * upper[1];
    complexd eps = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : complexd{1.0, 0.0};
    double defect = std::sqrt(std::norm(upper[0] - eps * flipped[0]) +
                              std::norm(upper[1] - eps * flipped[1]));

    const bool has_block_structure = defect <= tol * psi.norm();
    if (!has_block_structure) {
        bool mappable = false;
        for (int class_id = 1; class_id <= 3 && !mappable; ++class_id)
            mappable = is_mappable(psi, class_id, tol).mappable;
        if (!mappable)
            throw NotMappable("elko_from_dsf: mapping-condition residuals exceed tolerance");
        eps = complexd{1.0, 0.0}; // canonical assembly for a mapped Dirac spinor
    }

    DiracSpinor lambda{{eps * flipped[0], eps * flipped[1], lower[0], lower[1]}};

    // C acts as +-1 only when the block phase is real; detect the eigenvalue.
    const DiracSpinor c_lambda = charge_conjugate(lambda);
    const double norm = lambda.norm();
    const double r_plus = (c_lambda - lambda).norm() / norm;
    const double r_minus = (c_lambda + lambda).norm() / norm;
    const double conjugacy_budget = std::max(1e3 * tol, 1e-10);
    if (std::min(r_plus, r_minus) > conjugacy_budget)
        throw ConjugacyUndetermined("elko_from_dsf: C lambda is not close to +-lambda");

    ElkoSpinor out;
    out.psi = lambda;
    out.type = r_plus <= r_minus ? ConjugacyType::self_conjugate
                                 : ConjugacyType::anti_self_conjugate;

    // Kinematic labels reconstructed from the left-handed block: its Bloch axis
    // carries helicity +1, so the pair label is {-,+}; the rest normalization
    // |lambda|^2 = 2m fixes the mass scale.
    const double lsq = lower_norm * lower_norm;
    const double nz = (std::norm(lower[0]) - std::norm(lower[1])) / lsq;
    const complexd t = std::conj(lower[0]) * lower[1];
    const double nx = 2.0 * t.real() / lsq;
    const double ny = 2.0 * t.imag() / lsq;
    const double theta = std::acos(std::clamp(nz, -1.0, 1.0));
    const double phi_angle = (nx == 0.0 && ny == 0.0) ? 0.0 : std::atan2(ny, nx);
    constexpr double two_pi = 6.283185307179586476925286766559;
    out.pair = HelicityPair::minus_plus;
    out.momentum =
        Momentum::rest(0.5 * norm * norm, theta, phi_angle < 0.0 ? phi_angle + two_pi : phi_angle);

    if (classify(lambda, tol).class_id != 5)
        throw NotMappable("elko_from_dsf: assembled spinor is not class 5");
    return out;
}

} // namespace spinorforge
