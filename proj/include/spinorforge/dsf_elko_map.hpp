#pragma once

#include <array>
#include <vector>

#include "spinorforge/elko.hpp"
#include "spinorforge/spinor.hpp"

namespace spinorforge {

/// Residuals of the Dirac-to-ELKO mapping conditions. Every residual is the
/// printed left-hand side of its equation; the right-hand sides are all zero.
struct MappingResiduals {
    // Common conditions, complex form:
    //   [0] Re(psi1* psi3)
    //   [1] Re(psi2* psi4)
    //   [2] Re(psi2* psi3) + Re(psi1* psi4)
    //   [3] Im(psi1* psi4) - Im(psi2* psi3) - 2 Im(psi3* psi4) - 2 Im(psi1* psi2)
    std::array<double, 4> common{};

    // Class-(2) extra: Re(psi1* psi4) + Im(psi2* psi3).
    double class2_extra = 0.0;

    // Class-(3) extras: the complex-form condition
    //   Im(psi1* psi4) - Im(psi2* psi3) - 2 Im(psi1* psi2)
    // and the row-(3) first component condition (shared with row 1).
    std::array<double, 2> class3_extra{};

    // Component-form rows, evaluated verbatim from psi_ja = Re(psi_j), psi_jb = Im(psi_j).
    struct Table1 {
        std::array<double, 2> row1{}; // psi2a(psi3a-psi3b)+psi2b(psi3a+psi3b), psi3a psi4b - psi3b psi4a
        std::array<double, 2> row2{}; // psi3a psi4b - psi3b psi4a,  psi2a psi3a + psi2b psi3b + psi1a psi4a + psi1b psi4b
        std::array<double, 2> row3{}; // row1[0],  (psi1a psi4b - psi1b psi4a) - (psi2a psi3b - psi2b psi3a)
                                      //            - 2(psi3a psi4b - psi3b psi4a) - 2(psi1a psi2b - psi1b psi2a)
    } table1;
};

/// The four common conditions (complex form), as MappingResiduals::common.
std::array<double, 4> common_conditions(const DiracSpinor& psi);

/// Per-class extra conditions: class 2 -> {ad2}, class 3 -> {ad3},
/// class 1 -> {ad2, ad3}. Throws std::invalid_argument for other ids.
std::vector<double> class_conditions(const DiracSpinor& psi, int class_id);

/// Everything at once, including the component-form table rows.
MappingResiduals mapping_residuals(const DiracSpinor& psi);

struct MappabilityDiagnostics {
    bool mappable = false;
    double max_residual = 0.0;
    int observed_class = 0; // 0 when classification raised InconsistentCovariants
    std::vector<double> residuals;
};

/// True iff all common + class-extra residuals of the unit-normalized spinor
/// stay below tol AND classify(psi) returns the stated class.
/// Throws ZeroSpinor when |psi| <= tol.
MappabilityDiagnostics is_mappable(const DiracSpinor& psi, int class_id,
                                   double tol = kDefaultTolerance);

struct WeylBuildResult {
    DiracSpinor psi;
    /// || epsilon sigma2 conj(phi_L) - ((E + sigma.p)/m) phi_L ||: the defect of
    /// simultaneously satisfying the momentum-space Dirac relation and the
    /// flagpole block structure. Reported, never hidden; it vanishes for no
    /// nonzero phi_L.
    double dirac_defect = 0.0;
};

/// Builds psi = (epsilon sigma2 conj(phi_L), phi_L) for unimodular epsilon.
/// Throws std::invalid_argument for zero phi_L or non-unimodular epsilon.
WeylBuildResult dsf_from_weyl(const TwoSpinor& phi_L, complexd epsilon, const Momentum& momentum);

/// Extracts the lower (left-handed) block, assembles the eigenspinor
/// lambda = (eps sigma2 conj(phi_L), phi_L) with eps the detected unimodular
/// block phase, verifies C lambda = +-lambda and class 5, and returns the
/// ElkoSpinor with the detected conjugacy type.
///
/// Accepts inputs that already carry the block structure at tolerance, or that
/// pass is_mappable for some class in {1,2,3}. Otherwise throws NotMappable.
/// Throws ConjugacyUndetermined when the detected phase is not +-1 within
/// tolerance, and ZeroSpinor for vanishing input.
ElkoSpinor elko_from_dsf(const DiracSpinor& psi, double tol = kDefaultTolerance);

} // namespace spinorforge
