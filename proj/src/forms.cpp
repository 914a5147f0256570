#include "spinorforge/forms.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "spinorforge/errors.hpp"

namespace spinorforge {

namespace {

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0}; // eta^{aa} == eta_{aa}

} // namespace

int form_degree(int mask) { return std::popcount(static_cast<unsigned>(mask)); }

int wedge_sign(int mask_a, int mask_b) {
    // Count transpositions moving each index of b left past the larger indices of a.
    int inversions = 0;
    for (int j = 0; j < 4; ++j) {
        if (!(mask_b & (1 << j))) continue;
        inversions += std::popcount(static_cast<unsigned>(mask_a) >> (j + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

RealForm RealForm::basis(int mask) {
    RealForm f;
    f[mask] = 1.0;
    return f;
}

RealForm& RealForm::operator+=(const RealForm& other) {
    for (int m = 0; m < kFormBasisSize; ++m) c_[static_cast<std::size_t>(m)] += other[m];
    return *this;
}

RealForm& RealForm::operator-=(const RealForm& other) {
    for (int m = 0; m < kFormBasisSize; ++m) c_[static_cast<std::size_t>(m)] -= other[m];
    return *this;
}

RealForm& RealForm::operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
}

double RealForm::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

bool RealForm::is_zero(double tol) const { return max_abs() <= tol; }

std::optional<int> RealForm::pure_degree() const {
    std::optional<int> deg;
    for (int m = 0; m < kFormBasisSize; ++m) {
        if (c_[static_cast<std::size_t>(m)] == 0.0) continue;
        const int d = form_degree(m);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int>{0};
}

RealForm wedge(const RealForm& a, const RealForm& b) {
    RealForm r;
    for (int i = 0; i < kFormBasisSize; ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < kFormBasisSize; ++j) {
            if (b[j] == 0.0 || (i & j)) continue;
            r[i | j] += wedge_sign(i, j) * a[i] * b[j];
        }
    }
    return r;
}

RealForm hodge_star(const RealForm& xi) {
    if (!xi.pure_degree())
        throw std::invalid_argument("hodge_star: input must have a pure degree");
    RealForm r;
    for (int mask = 0; mask < kFormBasisSize; ++mask) {
        if (xi[mask] == 0.0) continue;
        const int comp = kVolumeMask & ~mask;
        double g = 1.0;
        for (int a = 0; a < 4; ++a)
            if (mask & (1 << a)) g *= kEta[a];
        r[comp] += xi[mask] * g * wedge_sign(mask, comp);
    }
    return r;
}

RealForm interior(int a, const RealForm& xi) {
    if (a < 0 || a > 3) throw std::out_of_range("interior: frame index must be in 0..3");
    RealForm r;
    const int bit = 1 << a;
    for (int mask = 0; mask < kFormBasisSize; ++mask) {
        if (xi[mask] == 0.0 || !(mask & bit)) continue;
        const int below = std::popcount(static_cast<unsigned>(mask) & static_cast<unsigned>(bit - 1));
        const double sign = (below % 2 == 0) ? 1.0 : -1.0;
        r[mask & ~bit] += sign * xi[mask];
    }
    return r;
}

CliffordForm CliffordForm::from_real(const RealForm& f) {
    CliffordForm r;
    for (int m = 0; m < kFormBasisSize; ++m)
        if (f[m] != 0.0) r[m] = complexd{f[m], 0.0} * CliffordElement::identity();
    return r;
}

CliffordForm& CliffordForm::operator+=(const CliffordForm& other) {
    for (int m = 0; m < kFormBasisSize; ++m) c_[static_cast<std::size_t>(m)] += other[m];
    return *this;
}

double CliffordForm::max_abs() const {
    double m = 0.0;
    for (const auto& e : c_) m = std::max(m, e.max_abs());
    return m;
}

std::optional<int> CliffordForm::pure_degree() const {
    std::optional<int> deg;
    for (int m = 0; m < kFormBasisSize; ++m) {
        if (c_[static_cast<std::size_t>(m)].max_abs() == 0.0) continue;
        const int d = form_degree(m);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int>{0};
}

CliffordForm wedge(const CliffordForm& a, const CliffordForm& b) {
    CliffordForm r;
    for (int i = 0; i < kFormBasisSize; ++i) {
        if (a[i].max_abs() == 0.0) continue;
        for (int j = 0; j < kFormBasisSize; ++j) {
            if ((i & j) || b[j].max_abs() == 0.0) continue;
            const complexd sign{static_cast<double>(wedge_sign(i, j)), 0.0};
            r[i | j] += sign * (a[i] * b[j]);
        }
    }
    return r;
}

CliffordForm hodge_star(const CliffordForm& xi) {
    if (!xi.pure_degree())
        throw std::invalid_argument("hodge_star: input must have a pure degree");
    RealForm scalar;
    for (int m = 0; m < kFormBasisSize; ++m) {
        const CliffordElement& e = xi[m];
        if (e.max_abs() == 0.0) continue;
        const complexd head = e.at(0, 0);
        if (std::abs(head.imag()) > 0.0)
            throw std::invalid_argument("hodge_star: coefficients must be real scalars");
        const CliffordElement diff = e - head * CliffordElement::identity();
        if (diff.max_abs() > 0.0)
            throw std::invalid_argument("hodge_star: coefficients must be scalar multiples of 1");
        scalar[m] = head.real();
    }
    return CliffordForm::from_real(hodge_star(scalar));
}

CliffordForm interior(int a, const CliffordForm& xi) {
    if (a < 0 || a > 3) throw std::out_of_range("interior: frame index must be in 0..3");
    CliffordForm r;
    const int bit = 1 << a;
    for (int mask = 0; mask < kFormBasisSize; ++mask) {
        if (!(mask & bit) || xi[mask].max_abs() == 0.0) continue;
        const int below = std::popcount(static_cast<unsigned>(mask) & static_cast<unsigned>(bit - 1));
        const complexd sign{below % 2 == 0 ? 1.0 : -1.0, 0.0};
        r[mask & ~bit] += sign * xi[mask];
    }
    return r;
}

CliffordForm coframe_form() {
    CliffordForm theta;
    for (int a = 0; a < 4; ++a) theta[1 << a] = gamma_lower(a);
    return theta;
}

int CurvatureSample::pair_index(int a, int b) {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    if (a < 0 || a > 3 || b < 0 || b > 3 || a == b)
        throw std::out_of_range("CurvatureSample: bad index pair");
    return table[a][b];
}

RealForm CurvatureSample::omega_upper(int a, int b) const {
    RealForm f = slots[static_cast<std::size_t>(pair_index(a, b))];
    if (a > b) f *= -1.0;
    return f;
}

RealForm CurvatureSample::omega_lower(int a, int b) const {
    RealForm f = omega_upper(a, b);
    f *= kEta[a] * kEta[b];
    return f;
}

double CurvatureSample::max_abs() const {
    double m = 0.0;
    for (const auto& f : slots) m = std::max(m, f.max_abs());
    return m;
}

double TorsionSample::max_abs() const {
    double m = 0.0;
    for (const auto& f : slots) m = std::max(m, f.max_abs());
    return m;
}

bool TorsionSample::nearly_equal(const TorsionSample& other, double tol) const {
    for (int a = 0; a < 4; ++a) {
        RealForm d = slots[static_cast<std::size_t>(a)];
        d -= other.slots[static_cast<std::size_t>(a)];
        if (d.max_abs() > tol) return false;
    }
    return true;
}

RealForm axial_torsion(const TorsionSample& t) {
    // a = star(Theta_b ^ theta^b), lowering the slot index with eta.
    RealForm three_form;
    for (int b = 0; b < 4; ++b) {
        RealForm lowered = t.slots[static_cast<std::size_t>(b)];
        lowered *= kEta[b];
        three_form += wedge(lowered, RealForm::basis(1 << b));
    }
    return hodge_star(three_form);
}

TorsionParts torsion_decompose(const TorsionSample& t) {
    TorsionParts parts;

    RealForm trace1;
    for (int b = 0; b < 4; ++b) trace1 += interior(b, t.slots[static_cast<std::size_t>(b)]);

    const RealForm axial = axial_torsion(t);

    for (int a = 0; a < 4; ++a) {
        RealForm trator = wedge(RealForm::basis(1 << a), trace1);
        trator *= 1.0 / 3.0;
        RealForm axitor = hodge_star(wedge(RealForm::basis(1 << a), axial));
        axitor *= -1.0 / 3.0;
        RealForm tentor = t.slots[static_cast<std::size_t>(a)];
        tentor -= trator;
        tentor -= axitor;
        parts.trator.slots[static_cast<std::size_t>(a)] = trator;
        parts.axitor.slots[static_cast<std::size_t>(a)] = axitor;
        parts.tentor.slots[static_cast<std::size_t>(a)] = tentor;
    }
    return parts;
}

namespace {

// Density helper: the implicit full sum over ordered (a,b) is twice the a<b sum.
double density_coefficient(const CurvatureSample& omega, bool with_star) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            RealForm pair_form = RealForm::basis((1 << a) | (1 << b));
            if (with_star) pair_form = hodge_star(pair_form);
            acc += wedge(omega.omega_lower(a, b), pair_form)[kVolumeMask];
        }
    return -2.0 * acc;
}

} // namespace

double eh_density(const CurvatureSample& omega) { return density_coefficient(omega, true); }

double ep_density(const CurvatureSample& omega) { return density_coefficient(omega, false); }

namespace {

complexd qsl_contraction(const DiracSpinor& psi, const CurvatureSample& omega,
                         const CliffordElement& pseudoscalar, double* scale_out) {
    const SpinorRow dual = dirac_dual(psi);
    const double psi_scale = psi.norm_sq();

    complexd total = 0.0;
    double scale = 0.0;
    for (int c = 0; c < 4; ++c) {
        for (int d = c + 1; d < 4; ++d) {
            const RealForm& omega_cd = omega.slots[static_cast<std::size_t>(
                CurvatureSample::pair_index(c, d))];
            if (omega_cd.max_abs() == 0.0) continue;
            const CliffordElement gamma_cd = gamma_lower(c) * gamma_lower(d);
            for (int a = 0; a < 4; ++a) {
                const RealForm left = wedge(RealForm::basis(1 << a), omega_cd);
                for (int b = 0; b < 4; ++b) {
                    const double coeff = wedge(left, RealForm::basis(1 << b))[kVolumeMask];
                    if (coeff == 0.0) continue;
                    const CliffordElement m =
                        gamma_lower(a) * gamma_cd * pseudoscalar * gamma_lower(b);
                    const complexd sandwich = row_dot(row_times(dual, m), psi);
                    total += coeff * sandwich;
                    scale += std::abs(coeff) * psi_scale;
                }
            }
        }
    }
    if (scale_out) *scale_out = scale;
    return total;
}

} // namespace

double qsl_curvature_term(const DiracSpinor& psi, const CurvatureSample& omega) {
    // Pseudoscalar slot pinned to the raised-index volume element
    // gamma^{0123} = i gamma5; validated by the normalized class-2 case
    // landing exactly on eh_density.
    static const CliffordElement pseudoscalar = complexd{0.0, 1.0} * gamma5();
    double scale = 0.0;
    const complexd total = qsl_contraction(psi, omega, pseudoscalar, &scale);
    if (std::abs(total.imag()) > 1e-8 * std::max(scale, 1e-300))
        throw ImaginaryResidue("qsl_curvature_term: imaginary 4-form coefficient");
    return total.real();
}

complexd qsl_curvature_term_gamma5_raw(const DiracSpinor& psi, const CurvatureSample& omega) {
    return qsl_contraction(psi, omega, gamma5(), nullptr);
}

double holst_value(const DiracSpinor& psi, const CurvatureSample& omega) {
    const BilinearCovariants b = bilinears(psi);
    return -(b.sigma * eh_density(omega) + b.chi * ep_density(omega));
}

HolstResult holst_density(const DiracSpinor& psi, const CurvatureSample& omega, double tol) {
    const BilinearCovariants b = bilinears(psi);
    HolstResult r;
    r.sigma = b.sigma;
    r.chi = b.chi;
    r.density = -(b.sigma * eh_density(omega) + b.chi * ep_density(omega));
    if (std::abs(b.chi) < tol)
        throw ImmirziUndefined("holst_density: |chi| below tolerance, Immirzi ratio undefined");
    r.immirzi = b.sigma / b.chi;
    return r;
}

} // namespace spinorforge
