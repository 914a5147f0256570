#include "spinorforge/lounesto.hpp"

#include <cmath>
#include <sstream>

#include "spinorforge/errors.hpp"

namespace spinorforge {

std::string_view lounesto_class_name(int class_id) {
    switch (class_id) {
        case 1: return "dirac-1";
        case 2: return "dirac-2";
        case 3: return "dirac-3";
        case 4: return "flag-dipole";
        case 5: return "flagpole";
        case 6: return "weyl";
        default: return "unknown";
    }
}

namespace {

std::string flag_string(const ZeroFlags& f) {
    std::ostringstream os;
    os << "zero flags (sigma,chi,J,K,S) = (" << f.sigma << "," << f.chi << "," << f.J << ","
       << f.K << "," << f.S << ")";
    return os.str();
}

} // namespace

int classify_pattern(const ZeroFlags& f) {
    // The current density is never zero for a nonzero spinor.
    if (f.J) throw InconsistentCovariants("classify: J flagged zero; " + flag_string(f));

    if (!f.sigma || !f.chi) {
        // Classes 1-3 implicitly require J, K, S all nonzero.
        if (f.K || f.S)
            throw InconsistentCovariants(
                "classify: sigma or chi nonzero but K or S flagged zero; " + flag_string(f));
        if (!f.sigma && !f.chi) return 1;
        if (!f.sigma) return 2;
        return 3;
    }
    // sigma = 0 = chi
    if (!f.K && !f.S) return 4;
    if (f.K && !f.S) return 5;
    if (!f.K && f.S) return 6;
    throw InconsistentCovariants("classify: sigma = chi = 0 with K = S = 0; " + flag_string(f));
}

ClassificationResult classify(const DiracSpinor& psi, double tol) {
    if (psi.norm() <= tol) throw ZeroSpinor("classify: spinor norm below tolerance");
    const DiracSpinor unit = psi.normalized();

    ClassificationResult r;
    r.covariants = bilinears(unit);
    r.tolerance_used = tol;
    r.zero_flags.sigma = std::abs(r.covariants.sigma) < tol;
    r.zero_flags.chi = std::abs(r.covariants.chi) < tol;
    r.zero_flags.J = r.covariants.max_abs_J() < tol;
    r.zero_flags.K = r.covariants.max_abs_K() < tol;
    r.zero_flags.S = r.covariants.max_abs_S() < tol;
    r.class_id = classify_pattern(r.zero_flags);
    r.name = lounesto_class_name(r.class_id);
    return r;
}

ActionTag class_of_action(int class_id) {
    switch (class_id) {
        case 1: return ActionTag::holst;
        case 2: return ActionTag::einstein_hilbert;
        case 3: return ActionTag::einstein_palatini;
        default: return ActionTag::none;
    }
}

std::string_view action_tag_name(ActionTag tag) {
    switch (tag) {
        case ActionTag::einstein_hilbert: return "einstein-hilbert";
        case ActionTag::einstein_palatini: return "einstein-palatini";
        case ActionTag::holst: return "holst";
        case ActionTag::none: return "none";
    }
    return "none";
}

} // namespace spinorforge
