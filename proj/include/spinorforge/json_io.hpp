#pragma once

#include <string>

#include "spinorforge/dsf_elko_map.hpp"
#include "spinorforge/elko.hpp"
#include "spinorforge/forms.hpp"
#include "spinorforge/lounesto.hpp"
#include "spinorforge/verify.hpp"

namespace spinorforge::jsonio {

// Emission is hand-rolled: fixed key order, floats at 17 significant digits,
// booleans as true/false, one trailing newline. Byte-identical output for
// identical values. Parsing goes through nlohmann::json; malformed input
// raises std::invalid_argument with a message suitable for stderr.

std::string format_double(double v);

std::string emit_spinor(const DiracSpinor& psi);
DiracSpinor parse_spinor(const std::string& text);

std::string emit_classification(const ClassificationResult& r);

struct ElkoVerifyBlock {
    int c_eigenvalue = 0;
    double c_residual = 0.0;
    int class_id = 0;
    double dual_norm = 0.0;
    std::array<double, 4> family_norms{};
};
std::string emit_elko(const ElkoSpinor& e, const ElkoVerifyBlock* verify = nullptr);
ElkoSpinor parse_elko(const std::string& text);

std::string emit_mapping_report(const MappingResiduals& r, const std::array<bool, 3>& mappable,
                                double tolerance);

std::string emit_curvature(const CurvatureSample& omega);
CurvatureSample parse_curvature(const std::string& text);

std::string emit_torsion(const TorsionSample& t);
TorsionSample parse_torsion(const std::string& text);

struct ActionsOutput {
    double eh = 0.0;
    double ep = 0.0;
    double holst = 0.0;
    bool has_immirzi = false;
    double immirzi = 0.0;
    int class_id = 0;
};
std::string emit_actions(const ActionsOutput& a);

std::string emit_report(const VerificationReport& r);
std::string emit_reports(const std::vector<VerificationReport>& rs); // suite "all" wrapper

/// Parses {"spinor": {...}, "curvature": {...}} for the actions command.
void parse_actions_input(const std::string& text, DiracSpinor& psi, CurvatureSample& omega);

} // namespace spinorforge::jsonio
