#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace spinorforge {

using complexd = std::complex<double>;

/// An element of complexified Cl(1,3) in the 4x4 Weyl matrix representation.
///
/// The generators obey gamma(mu)*gamma(nu) + gamma(nu)*gamma(mu) = 2 eta_{mu nu} I
/// with eta = diag(1,-1,-1,-1), exactly: every basis product has entries in
/// {0, +-1, +-i}, so double-precision arithmetic on them is exact.
class CliffordElement {
  public:
    CliffordElement() = default;

    static CliffordElement zero() { return CliffordElement{}; }
    static CliffordElement identity();

    complexd& at(int row, int col) { return entries_[static_cast<std::size_t>(4 * row + col)]; }
    const complexd& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(4 * row + col)];
    }

    CliffordElement& operator+=(const CliffordElement& other);
    CliffordElement& operator-=(const CliffordElement& other);
    CliffordElement& operator*=(const complexd& scale);

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) {
        a += b;
        return a;
    }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) {
        a -= b;
        return a;
    }
    friend CliffordElement operator*(const complexd& scale, CliffordElement a) {
        a *= scale;
        return a;
    }
    friend CliffordElement operator*(CliffordElement a, const complexd& scale) {
        a *= scale;
        return a;
    }
    friend CliffordElement operator-(const CliffordElement& a) { return complexd(-1.0, 0.0) * a; }

    /// Matrix (Clifford) product.
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

    CliffordElement dagger() const;
    complexd trace() const;
    double max_abs() const;
    double max_abs_diff(const CliffordElement& other) const;
    bool exactly_equal(const CliffordElement& other) const;

  private:
    std::array<complexd, 16> entries_{};
};

/// The Weyl-representation gamma matrix with an upper index, gamma^mu.
/// gamma^0 has off-diagonal identity blocks; gamma^k has off-diagonal
/// +-sigma_k blocks arranged so that gamma5() == -i g0 g1 g2 g3 == diag(1,1,-1,-1).
/// Throws std::out_of_range unless mu is in 0..3.
CliffordElement gamma(int mu);

/// Lower-index gamma_mu = eta_{mu mu} gamma^mu.
CliffordElement gamma_lower(int mu);

/// gamma5 = -i gamma^0 gamma^1 gamma^2 gamma^3 = diag(1,1,-1,-1), exactly.
CliffordElement gamma5();

/// Volume element gamma_0 gamma_1 gamma_2 gamma_3 (all indices lowered); equals -i*gamma5.
CliffordElement gamma0123_lower();

/// Clifford product; alias for the matrix product.
CliffordElement product(const CliffordElement& a, const CliffordElement& b);

/// The 16-element graded basis {1, gamma_mu, gamma_mu gamma_nu (mu<nu),
/// gamma_mu gamma_nu gamma_rho (mu<nu<rho), gamma_0 gamma_1 gamma_2 gamma_3}
/// together with its Gram matrix under (A,B) -> (1/4) trace(A^dagger B).
struct GradedBasis {
    std::array<CliffordElement, 16> elements;
    std::array<int, 16> grades;           // 0..4 per element
    std::array<complexd, 16 * 16> gram;   // row-major 16x16
};

const GradedBasis& graded_basis();

/// Component of `a` in the span of the grade-k basis elements.
/// Summing over k = 0..4 reconstructs `a`. Throws std::out_of_range for k outside 0..4.
CliffordElement grade_project(const CliffordElement& a, int k);

/// Coefficients of `a` in the graded basis, ordered as in GradedBasis::elements.
std::array<complexd, 16> basis_coefficients(const CliffordElement& a);

} // namespace spinorforge
