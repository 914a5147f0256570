#include "spinorforge/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinorforge {

namespace {

constexpr complexd kI{0.0, 1.0};

} // namespace

CliffordElement CliffordElement::identity() {
    CliffordElement e;
    for (int i = 0; i < 4; ++i) e.at(i, i) = 1.0;
    return e;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
    for (std::size_t i = 0; i < 16; ++i) entries_[i] += other.entries_[i];
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
    for (std::size_t i = 0; i < 16; ++i) entries_[i] -= other.entries_[i];
    return *this;
}

CliffordElement& CliffordElement::operator*=(const complexd& scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const complexd aik = a.at(i, k);
            if (aik == complexd{}) continue;
            for (int j = 0; j < 4; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

CliffordElement CliffordElement::dagger() const {
    CliffordElement r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

complexd CliffordElement::trace() const {
    return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3);
}

double CliffordElement::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double CliffordElement::max_abs_diff(const CliffordElement& other) const {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
}

bool CliffordElement::exactly_equal(const CliffordElement& other) const {
    return entries_ == other.entries_;
}

CliffordElement gamma(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("gamma: index must be in 0..3");
    CliffordElement g;
    switch (mu) {
        case 0:
            // off-diagonal identity blocks
            g.at(0, 2) = 1.0;
            g.at(1, 3) = 1.0;
            g.at(2, 0) = 1.0;
            g.at(3, 1) = 1.0;
            break;
        case 1:
            // [[0, sigma1], [-sigma1, 0]]
            g.at(0, 3) = 1.0;
            g.at(1, 2) = 1.0;
            g.at(2, 1) = -1.0;
            g.at(3, 0) = -1.0;
            break;
        case 2:
            // [[0, sigma2], [-sigma2, 0]]
            g.at(0, 3) = -kI;
            g.at(1, 2) = kI;
            g.at(2, 1) = kI;
            g.at(3, 0) = -kI;
            break;
        case 3:
            // [[0, sigma3], [-sigma3, 0]]
            g.at(0, 2) = 1.0;
            g.at(1, 3) = -1.0;
            g.at(2, 0) = -1.0;
            g.at(3, 1) = 1.0;
            break;
    }
    return g;
}

CliffordElement gamma_lower(int mu) {
    CliffordElement g = gamma(mu);
    if (mu != 0) g *= complexd{-1.0, 0.0};
    return g;
}

CliffordElement gamma5() {
    static const CliffordElement g5 = [] {
        CliffordElement p = gamma(0) * gamma(1) * gamma(2) * gamma(3);
        return complexd{0.0, -1.0} * p;
    }();
    return g5;
}

CliffordElement gamma0123_lower() {
    static const CliffordElement v =
        gamma_lower(0) * gamma_lower(1) * gamma_lower(2) * gamma_lower(3);
    return v;
}

CliffordElement product(const CliffordElement& a, const CliffordElement& b) {
    return a * b;
}

namespace {

// Gaussian elimination with partial pivoting for the 16x16 Gram system.
std::array<complexd, 16> solve16(const std::array<complexd, 256>& a_in,
                                 const std::array<complexd, 16>& b_in) {
    std::array<complexd, 256> a = a_in;
    std::array<complexd, 16> b = b_in;
    constexpr int n = 16;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[static_cast<std::size_t>(col * n + col)]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a[static_cast<std::size_t>(r * n + col)]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("grade_project: singular Gram matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(pivot * n + c)],
                          a[static_cast<std::size_t>(col * n + c)]);
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
        }
        const complexd inv = 1.0 / a[static_cast<std::size_t>(col * n + col)];
        for (int r = col + 1; r < n; ++r) {
            const complexd f = a[static_cast<std::size_t>(r * n + col)] * inv;
            if (f == complexd{}) continue;
            for (int c = col; c < n; ++c)
                a[static_cast<std::size_t>(r * n + c)] -= f * a[static_cast<std::size_t>(col * n + c)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    std::array<complexd, 16> x{};
    for (int r = n - 1; r >= 0; --r) {
        complexd s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c)
            s -= a[static_cast<std::size_t>(r * n + c)] * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / a[static_cast<std::size_t>(r * n + r)];
    }
    return x;
}

GradedBasis build_basis() {
    GradedBasis basis;
    int idx = 0;
    basis.elements[static_cast<std::size_t>(idx)] = CliffordElement::identity();
    basis.grades[static_cast<std::size_t>(idx)] = 0;
    ++idx;
    for (int mu = 0; mu < 4; ++mu) {
        basis.elements[static_cast<std::size_t>(idx)] = gamma_lower(mu);
        basis.grades[static_cast<std::size_t>(idx)] = 1;
        ++idx;
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            basis.elements[static_cast<std::size_t>(idx)] = gamma_lower(mu) * gamma_lower(nu);
            basis.grades[static_cast<std::size_t>(idx)] = 2;
            ++idx;
        }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = nu + 1; rho < 4; ++rho) {
                basis.elements[static_cast<std::size_t>(idx)] =
                    gamma_lower(mu) * gamma_lower(nu) * gamma_lower(rho);
                basis.grades[static_cast<std::size_t>(idx)] = 3;
                ++idx;
            }
    basis.elements[static_cast<std::size_t>(idx)] = gamma0123_lower();
    basis.grades[static_cast<std::size_t>(idx)] = 4;

    for (int i = 0; i < 16; ++i) {
        const CliffordElement di = basis.elements[static_cast<std::size_t>(i)].dagger();
        for (int j = 0; j < 16; ++j) {
            basis.gram[static_cast<std::size_t>(16 * i + j)] =
                0.25 * (di * basis.elements[static_cast<std::size_t>(j)]).trace();
        }
    }
    return basis;
}

} // namespace

const GradedBasis& graded_basis() {
    static const GradedBasis basis = build_basis();
    return basis;
}

std::array<complexd, 16> basis_coefficients(const CliffordElement& a) {
    const GradedBasis& basis = graded_basis();
    std::array<complexd, 16> rhs;
    for (int i = 0; i < 16; ++i)
        rhs[static_cast<std::size_t>(i)] =
            0.25 * (basis.elements[static_cast<std::size_t>(i)].dagger() * a).trace();
    return solve16(basis.gram, rhs);
}

CliffordElement grade_project(const CliffordElement& a, int k) {
    if (k < 0 || k > 4) throw std::out_of_range("grade_project: grade must be in 0..4");
    const GradedBasis& basis = graded_basis();
    const std::array<complexd, 16> coeff = basis_coefficients(a);
    CliffordElement r;
    for (int i = 0; i < 16; ++i) {
        if (basis.grades[static_cast<std::size_t>(i)] != k) continue;
        r += coeff[static_cast<std::size_t>(i)] * basis.elements[static_cast<std::size_t>(i)];
    }
    return r;
}

} // namespace spinorforge
