#pragma once

#include <string_view>

#include "spinorforge/spinor.hpp"

namespace spinorforge {

/// Zero flags for the covariant pattern (sigma, chi, J, K, S) at the working tolerance.
struct ZeroFlags {
    bool sigma = false;
    bool chi = false;
    bool J = false;
    bool K = false;
    bool S = false;
};

struct ClassificationResult {
    int class_id = 0;                  // 1..6
    std::string_view name;             // dirac-1, dirac-2, dirac-3, flag-dipole, flagpole, weyl
    BilinearCovariants covariants;     // computed from the unit-normalized spinor
    ZeroFlags zero_flags;
    double tolerance_used = kDefaultTolerance;
};

std::string_view lounesto_class_name(int class_id);

/// Decide the class from the zero pattern alone.
///
/// Classes 1-3 require J, K, S all nonzero; J must never be zero. Patterns
/// matching no row throw InconsistentCovariants (numerical marginality, or
/// covariants not derived from an actual spinor).
int classify_pattern(const ZeroFlags& flags);

/// Normalize psi to unit Euclidean norm, compute bilinears, flag zeros by
/// max-abs component against `tol`, and return the unique matching class.
/// Throws ZeroSpinor when |psi| <= tol, InconsistentCovariants when no row matches.
ClassificationResult classify(const DiracSpinor& psi, double tol = kDefaultTolerance);

enum class ActionTag { einstein_hilbert, einstein_palatini, holst, none };

/// Gravity action corresponding to a class: 2 -> Einstein-Hilbert,
/// 3 -> Einstein-Palatini, 1 -> Holst, 4/5/6 -> none.
ActionTag class_of_action(int class_id);

std::string_view action_tag_name(ActionTag tag);

} // namespace spinorforge
