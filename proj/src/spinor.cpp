#include "spinorforge/spinor.hpp"

#include <cmath>
#include <stdexcept>

#include "spinorforge/errors.hpp"

namespace spinorforge {

double DiracSpinor::norm_sq() const {
    double s = 0.0;
    for (const auto& z : c) s += std::norm(z);
    return s;
}

double DiracSpinor::norm() const { return std::sqrt(norm_sq()); }

DiracSpinor DiracSpinor::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw ZeroSpinor("normalized: zero spinor");
    return complexd{1.0 / n, 0.0} * (*this);
}

double BilinearCovariants::max_abs_J() const {
    double m = 0.0;
    for (double v : J) m = std::max(m, std::abs(v));
    return m;
}

double BilinearCovariants::max_abs_K() const {
    double m = 0.0;
    for (double v : K) m = std::max(m, std::abs(v));
    return m;
}

double BilinearCovariants::max_abs_S() const {
    double m = 0.0;
    for (double v : S) m = std::max(m, std::abs(v));
    return m;
}

SpinorRow dirac_dual(const DiracSpinor& psi) {
    // psi^dagger gamma^0: gamma^0 swaps the two-component blocks.
    return {std::conj(psi[2]), std::conj(psi[3]), std::conj(psi[0]), std::conj(psi[1])};
}

SpinorRow row_times(const SpinorRow& row, const CliffordElement& m) {
    SpinorRow r{};
    for (int j = 0; j < 4; ++j) {
        complexd s = 0.0;
        for (int k = 0; k < 4; ++k) s += row[static_cast<std::size_t>(k)] * m.at(k, j);
        r[static_cast<std::size_t>(j)] = s;
    }
    return r;
}

complexd row_dot(const SpinorRow& row, const DiracSpinor& psi) {
    complexd s = 0.0;
    for (int k = 0; k < 4; ++k) s += row[static_cast<std::size_t>(k)] * psi[k];
    return s;
}

namespace {

struct BilinearMatrices {
    CliffordElement J[4];      // gamma_mu
    CliffordElement K[4];      // i gamma_0123 gamma_mu
    CliffordElement S[6];      // (1/2) i gamma_mu gamma_nu, mu<nu
    CliffordElement chi_mat;   // -gamma_0123
};

const BilinearMatrices& bilinear_matrices() {
    static const BilinearMatrices m = [] {
        BilinearMatrices r;
        const complexd i{0.0, 1.0};
        const CliffordElement vol = gamma0123_lower();
        for (int mu = 0; mu < 4; ++mu) {
            r.J[mu] = gamma_lower(mu);
            r.K[mu] = i * (vol * gamma_lower(mu));
        }
        int idx = 0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu)
                r.S[idx++] = (0.5 * i) * (gamma_lower(mu) * gamma_lower(nu));
        r.chi_mat = -vol;
        return r;
    }();
    return m;
}

double real_sandwich(const SpinorRow& dual, const CliffordElement& m, const DiracSpinor& psi,
                     double imag_budget, const char* label) {
    const complexd v = row_dot(row_times(dual, m), psi);
    if (std::abs(v.imag()) > imag_budget)
        throw ImaginaryResidue(std::string("bilinears: imaginary residue in ") + label);
    return v.real();
}

} // namespace

BilinearCovariants bilinears(const DiracSpinor& psi) {
    const BilinearMatrices& mats = bilinear_matrices();
    const SpinorRow dual = dirac_dual(psi);
    const double budget = 1e-8 * psi.norm_sq();

    BilinearCovariants out;
    {
        const complexd v = row_dot(dual, psi);
        if (std::abs(v.imag()) > budget) throw ImaginaryResidue("bilinears: imaginary sigma");
        out.sigma = v.real();
    }
    out.chi = real_sandwich(dual, mats.chi_mat, psi, budget, "chi");
    for (int mu = 0; mu < 4; ++mu) {
        out.J[static_cast<std::size_t>(mu)] = real_sandwich(dual, mats.J[mu], psi, budget, "J");
        out.K[static_cast<std::size_t>(mu)] = real_sandwich(dual, mats.K[mu], psi, budget, "K");
    }
    for (int s = 0; s < 6; ++s)
        out.S[static_cast<std::size_t>(s)] = real_sandwich(dual, mats.S[s], psi, budget, "S");
    return out;
}

DiracSpinor charge_conjugate(const DiracSpinor& psi) {
    static const CliffordElement minus_gamma2 = -gamma(2);
    DiracSpinor conj_psi;
    for (int k = 0; k < 4; ++k) conj_psi[k] = std::conj(psi[k]);
    DiracSpinor r;
    for (int i = 0; i < 4; ++i) {
        complexd s = 0.0;
        for (int k = 0; k < 4; ++k) s += minus_gamma2.at(i, k) * conj_psi[k];
        r[i] = s;
    }
    return r;
}

DiracSpinor chirality_project(const DiracSpinor& psi, Handedness hand) {
    DiracSpinor r;
    if (hand == Handedness::right) {
        r[0] = psi[0];
        r[1] = psi[1];
    } else {
        r[2] = psi[2];
        r[3] = psi[3];
    }
    return r;
}

TwoSpinor helicity_apply(const TwoSpinor& phi, const std::array<double, 3>& p_hat) {
    const double n2 = p_hat[0] * p_hat[0] + p_hat[1] * p_hat[1] + p_hat[2] * p_hat[2];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw std::invalid_argument("helicity_apply: direction must be unit to 1e-12");
    // sigma . p_hat = [[pz, px - i py], [px + i py, -pz]]
    const complexd off{p_hat[0], -p_hat[1]};
    return {p_hat[2] * phi[0] + off * phi[1], std::conj(off) * phi[0] - p_hat[2] * phi[1]};
}

double minkowski_square(const std::array<double, 4>& v) {
    return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
}

double minkowski_dot(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

} // namespace spinorforge
