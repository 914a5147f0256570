#pragma once

#include <array>
#include <complex>

#include "spinorforge/clifford.hpp"

namespace spinorforge {

/// Default zero-pattern tolerance, applied after unit normalization.
inline constexpr double kDefaultTolerance = 1e-9;

using TwoSpinor = std::array<complexd, 2>;
using SpinorRow = std::array<complexd, 4>;

/// A Dirac spinor: four complex components in the Weyl representation.
/// Upper pair = right-handed block, lower pair = left-handed block.
struct DiracSpinor {
    std::array<complexd, 4> c{};

    complexd& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const complexd& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    TwoSpinor upper() const { return {c[0], c[1]}; }
    TwoSpinor lower() const { return {c[2], c[3]}; }

    double norm_sq() const;
    double norm() const;
    DiracSpinor normalized() const; // throws ZeroSpinor when the norm underflows

    friend DiracSpinor operator+(const DiracSpinor& a, const DiracSpinor& b) {
        return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
    }
    friend DiracSpinor operator-(const DiracSpinor& a, const DiracSpinor& b) {
        return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
    }
    friend DiracSpinor operator*(const complexd& s, const DiracSpinor& a) {
        return {{s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]}};
    }
};

/// The five Lounesto covariants. All entries are real numbers; the imaginary
/// residue of each defining sandwich is checked against 1e-8 * |psi|^2.
///
/// sigma = psibar psi
/// J_mu  = psibar gamma_mu psi
/// S_munu = (1/2) psi^dag gamma_0 i gamma_mu gamma_nu psi   (mu<nu, ordered 01,02,03,12,13,23)
/// K_mu  = psibar i gamma_0123 gamma_mu psi
/// chi   = -psibar gamma_0123 psi
struct BilinearCovariants {
    double sigma = 0.0;
    double chi = 0.0;
    std::array<double, 4> J{};
    std::array<double, 4> K{};
    std::array<double, 6> S{};

    double max_abs_J() const;
    double max_abs_K() const;
    double max_abs_S() const;
};

/// Dirac dual psibar = psi^dagger gamma^0, as a row.
SpinorRow dirac_dual(const DiracSpinor& psi);

/// Row-by-matrix and row-by-column contractions.
SpinorRow row_times(const SpinorRow& row, const CliffordElement& m);
complexd row_dot(const SpinorRow& row, const DiracSpinor& psi);

/// All five bilinear covariants. Throws ImaginaryResidue if any sandwich has
/// imaginary part above 1e-8 * |psi|^2.
BilinearCovariants bilinears(const DiracSpinor& psi);

/// Charge conjugation C psi = -gamma^2 conj(psi). Antilinear; C^2 = identity.
DiracSpinor charge_conjugate(const DiracSpinor& psi);

enum class Handedness { left, right };

/// Chirality projection with (1 -+ gamma5)/2: left keeps the lower two
/// components, right keeps the upper two.
DiracSpinor chirality_project(const DiracSpinor& psi, Handedness hand);

/// (sigma . p_hat) acting on a two-spinor. p_hat must be unit to 1e-12.
TwoSpinor helicity_apply(const TwoSpinor& phi, const std::array<double, 3>& p_hat);

/// v0^2 - v1^2 - v2^2 - v3^2.
double minkowski_square(const std::array<double, 4>& v);

/// Minkowski pairing a.b with eta = diag(1,-1,-1,-1).
double minkowski_dot(const std::array<double, 4>& a, const std::array<double, 4>& b);

} // namespace spinorforge
