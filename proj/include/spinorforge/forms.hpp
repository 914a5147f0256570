#pragma once

#include <array>
#include <optional>

#include "spinorforge/clifford.hpp"
#include "spinorforge/spinor.hpp"

namespace spinorforge {

// Exterior algebra over a fixed 4-dimensional orthonormal coframe theta^0..theta^3
// with metric eta = diag(1,-1,-1,-1) and volume form tau = theta^0123.
// Basis forms are indexed by bitmasks over {0,1,2,3}; degree = popcount(mask).

inline constexpr int kFormBasisSize = 16;
inline constexpr int kVolumeMask = 0b1111;

/// Basis 2-form masks in the fixed component order (01,02,03,12,13,23).
inline constexpr std::array<int, 6> kTwoFormMasks = {0b0011, 0b0101, 0b1001,
                                                     0b0110, 0b1010, 0b1100};

int form_degree(int mask);

/// Sign of theta^I wedge theta^J relative to theta^{I|J} for disjoint masks
/// (number of transpositions needed to merge the two increasing index lists).
int wedge_sign(int mask_a, int mask_b);

/// A real-coefficient exterior form, possibly of mixed degree.
class RealForm {
  public:
    RealForm() = default;

    static RealForm basis(int mask); // theta^I
    static RealForm volume() { return basis(kVolumeMask); }

    double& operator[](int mask) { return c_[static_cast<std::size_t>(mask)]; }
    const double& operator[](int mask) const { return c_[static_cast<std::size_t>(mask)]; }

    RealForm& operator+=(const RealForm& other);
    RealForm& operator-=(const RealForm& other);
    RealForm& operator*=(double s);
    friend RealForm operator+(RealForm a, const RealForm& b) { a += b; return a; }
    friend RealForm operator-(RealForm a, const RealForm& b) { a -= b; return a; }
    friend RealForm operator*(double s, RealForm a) { a *= s; return a; }

    double max_abs() const;
    bool is_zero(double tol = 0.0) const;

    /// Degree when homogeneous (zero form counts as any degree -> returns nullopt
    /// only for genuinely mixed content).
    std::optional<int> pure_degree() const;

  private:
    std::array<double, kFormBasisSize> c_{};
};

RealForm wedge(const RealForm& a, const RealForm& b);

/// Hodge dual fixed by xi ^ star(zeta) = G(xi, zeta) tau over the orthonormal
/// coframe; exact on basis forms. Requires a pure-degree input.
RealForm hodge_star(const RealForm& xi);

/// Interior product e_a . xi with e_a dual to theta^a (no metric); graded antiderivation.
RealForm interior(int a, const RealForm& xi);

/// A Clifford-algebra-valued exterior form: one CliffordElement per basis form.
class CliffordForm {
  public:
    CliffordForm() = default;

    static CliffordForm from_real(const RealForm& f); // coefficients times identity

    CliffordElement& operator[](int mask) { return c_[static_cast<std::size_t>(mask)]; }
    const CliffordElement& operator[](int mask) const {
        return c_[static_cast<std::size_t>(mask)];
    }

    CliffordForm& operator+=(const CliffordForm& other);
    friend CliffordForm operator+(CliffordForm a, const CliffordForm& b) { a += b; return a; }

    double max_abs() const;
    std::optional<int> pure_degree() const;

  private:
    std::array<CliffordElement, kFormBasisSize> c_{};
};

/// (Phi^I wedge Gamma^J) tensor gamma_I gamma_J: form parts wedge with
/// alternating signs, Clifford parts multiply as matrices.
CliffordForm wedge(const CliffordForm& a, const CliffordForm& b);

/// Hodge star on a Clifford form whose coefficients are real multiples of the
/// identity; throws std::invalid_argument for mixed degree or non-scalar coefficients.
CliffordForm hodge_star(const CliffordForm& xi);

CliffordForm interior(int a, const CliffordForm& xi);

/// The coframe 1-form theta = theta^a (x) gamma_a.
CliffordForm coframe_form();

/// Curvature sample: six 2-forms Omega^{ab} for a<b, ordered (01,02,03,12,13,23).
/// Antisymmetry in (a,b) is implied by storage. Free input data, not derived
/// from a connection.
struct CurvatureSample {
    std::array<RealForm, 6> slots{};

    static int pair_index(int a, int b); // a<b
    /// Omega^{ab} for any a != b, with the antisymmetry sign.
    RealForm omega_upper(int a, int b) const;
    /// Omega_{ab} = eta_aa eta_bb Omega^{ab}.
    RealForm omega_lower(int a, int b) const;
    double max_abs() const;
};

/// Torsion sample: four 2-forms Theta^a.
struct TorsionSample {
    std::array<RealForm, 4> slots{};

    double max_abs() const;
    bool nearly_equal(const TorsionSample& other, double tol) const;
};

struct TorsionParts {
    TorsionSample tentor; // (1): remainder
    TorsionSample trator; // (2): (1/3) theta^a ^ (e_b . Theta^b)
    TorsionSample axitor; // (3): -(1/3) star(theta^a ^ a),  a = star(Theta_b ^ theta^b)
};

/// Axial 1-form a = star(Theta_b wedge theta^b).
RealForm axial_torsion(const TorsionSample& t);

/// Irreducible decomposition under the global Lorentz group; the three parts
/// sum to the input by construction.
TorsionParts torsion_decompose(const TorsionSample& t);

/// Einstein-Hilbert density: coefficient of tau in -Omega_ab ^ star(theta^a ^ theta^b),
/// full implicit sum over a,b (twice the a<b sum).
double eh_density(const CurvatureSample& omega);

/// Einstein-Palatini density: as eh_density with the star removed.
double ep_density(const CurvatureSample& omega);

/// Algebraic (non-derivative) curvature term of the quadratic spinor Lagrangian
/// under the ansatz Psi = psi (x) theta:
///
///   2 Sum_{a,b,c<d} (theta^a ^ Omega^{cd} ^ theta^b)/2 . [psibar gamma_a gamma_cd P gamma_b psi]
///
/// with the pseudoscalar slot P pinned to the raised-index volume element
/// gamma^{0123} = i gamma5; with the chirality matrix gamma5 itself in that
/// slot the 4-form coefficient comes out purely imaginary (the failing
/// alternative is kept under test). Equals sigma*eh_density + chi*ep_density
/// with (sigma, chi) = bilinears(psi). Throws ImaginaryResidue when the
/// coefficient's imaginary part exceeds 1e-8 of the accumulated term scale.
double qsl_curvature_term(const DiracSpinor& psi, const CurvatureSample& omega);

/// Same contraction with gamma5 in the pseudoscalar slot, returned as the raw
/// complex coefficient. Kept for tests documenting the pinned convention.
complexd qsl_curvature_term_gamma5_raw(const DiracSpinor& psi, const CurvatureSample& omega);

/// The Holst combination sigma * (Omega_ab ^ star(theta^a theta^b) term)
///                     + chi  * (Omega_ab ^ theta^a theta^b term),
/// i.e. sigma*(-eh) + chi*(-ep) = -qsl_curvature_term. No class gate.
double holst_value(const DiracSpinor& psi, const CurvatureSample& omega);

struct HolstResult {
    double density = 0.0;
    double immirzi = 0.0;
    double sigma = 0.0;
    double chi = 0.0;
};

/// Holst density plus the Immirzi ratio sigma/chi.
/// Throws ImmirziUndefined when |chi| < tol (the class-2 limit).
HolstResult holst_density(const DiracSpinor& psi, const CurvatureSample& omega,
                          double tol = kDefaultTolerance);

} // namespace spinorforge
