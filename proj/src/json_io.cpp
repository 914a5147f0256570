#include "spinorforge/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spinorforge::jsonio {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON input");
    return j;
}

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite number");
    return v;
}

std::array<complexd, 4> components_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(what) + ": components must be 4 [re, im] pairs");
    std::array<complexd, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const json& pair = j[k];
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument(std::string(what) + ": component must be [re, im]");
        out[k] = complexd{number_at(pair[0], what), number_at(pair[1], what)};
    }
    return out;
}

void append_double(std::string& out, double v) { out += format_double(v); }

void append_double_array(std::string& out, const double* v, std::size_t n) {
    out += '[';
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ',';
        append_double(out, v[i]);
    }
    out += ']';
}

void append_components(std::string& out, const std::array<complexd, 4>& c) {
    out += '[';
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ',';
        out += '[';
        append_double(out, c[i].real());
        out += ',';
        append_double(out, c[i].imag());
        out += ']';
    }
    out += ']';
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

constexpr const char* kTwoFormKeys[6] = {"01", "02", "03", "12", "13", "23"};

} // namespace

std::string format_double(double v) {
    if (v == 0.0) return "0"; // normalize the sign of zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string emit_spinor(const DiracSpinor& psi) {
    std::string out = "{\"components\":";
    append_components(out, psi.c);
    out += "}\n";
    return out;
}

DiracSpinor parse_spinor(const std::string& text) {
    const json j = parse_json(text, "spinor");
    if (!j.is_object() || !j.contains("components"))
        throw std::invalid_argument("spinor: missing \"components\"");
    return DiracSpinor{components_from(j["components"], "spinor")};
}

std::string emit_classification(const ClassificationResult& r) {
    std::string out = "{\"class\":";
    out += std::to_string(r.class_id);
    out += ",\"name\":\"";
    out += r.name;
    out += "\",\"sigma\":";
    append_double(out, r.covariants.sigma);
    out += ",\"chi\":";
    append_double(out, r.covariants.chi);
    out += ",\"J\":";
    append_double_array(out, r.covariants.J.data(), 4);
    out += ",\"K\":";
    append_double_array(out, r.covariants.K.data(), 4);
    out += ",\"S\":";
    append_double_array(out, r.covariants.S.data(), 6);
    out += ",\"zero_flags\":{\"sigma\":";
    out += bool_str(r.zero_flags.sigma);
    out += ",\"chi\":";
    out += bool_str(r.zero_flags.chi);
    out += ",\"J\":";
    out += bool_str(r.zero_flags.J);
    out += ",\"K\":";
    out += bool_str(r.zero_flags.K);
    out += ",\"S\":";
    out += bool_str(r.zero_flags.S);
    out += "},\"tolerance\":";
    append_double(out, r.tolerance_used);
    out += "}\n";
    return out;
}

std::string emit_elko(const ElkoSpinor& e, const ElkoVerifyBlock* verify) {
    std::string out = "{\"type\":\"";
    out += conjugacy_label(e.type);
    out += "\",\"pair\":\"";
    out += pair_label(e.pair);
    out += "\",\"m\":";
    append_double(out, e.momentum.m);
    out += ",\"p\":";
    append_double(out, e.momentum.p_mag);
    out += ",\"theta\":";
    append_double(out, e.momentum.theta);
    out += ",\"phi\":";
    append_double(out, e.momentum.phi);
    out += ",\"components\":";
    append_components(out, e.psi.c);
    if (verify) {
        out += ",\"verify\":{\"c_eigenvalue\":";
        out += std::to_string(verify->c_eigenvalue);
        out += ",\"c_residual\":";
        append_double(out, verify->c_residual);
        out += ",\"class\":";
        out += std::to_string(verify->class_id);
        out += ",\"dual_norm\":";
        append_double(out, verify->dual_norm);
        out += ",\"family_norms\":";
        append_double_array(out, verify->family_norms.data(), 4);
        out += "}";
    }
    out += "}\n";
    return out;
}

ElkoSpinor parse_elko(const std::string& text) {
    const json j = parse_json(text, "elko");
    if (!j.is_object()) throw std::invalid_argument("elko: expected an object");
    for (const char* key : {"type", "pair", "m", "p", "theta", "phi", "components"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("elko: missing \"") + key + "\"");
    ElkoSpinor e;
    const std::string type = j["type"].get<std::string>();
    if (type == "S")
        e.type = ConjugacyType::self_conjugate;
    else if (type == "A")
        e.type = ConjugacyType::anti_self_conjugate;
    else
        throw std::invalid_argument("elko: type must be \"S\" or \"A\"");
    const std::string pair = j["pair"].get<std::string>();
    if (pair == "-+")
        e.pair = HelicityPair::minus_plus;
    else if (pair == "+-")
        e.pair = HelicityPair::plus_minus;
    else
        throw std::invalid_argument("elko: pair must be \"-+\" or \"+-\"");
    e.momentum = Momentum::make(number_at(j["m"], "elko"), number_at(j["p"], "elko"),
                                number_at(j["theta"], "elko"), number_at(j["phi"], "elko"));
    e.psi = DiracSpinor{components_from(j["components"], "elko")};
    return e;
}

std::string emit_mapping_report(const MappingResiduals& r, const std::array<bool, 3>& mappable,
                                double tolerance) {
    std::string out = "{\"common_residuals\":";
    append_double_array(out, r.common.data(), 4);
    out += ",\"class2\":";
    append_double(out, r.class2_extra);
    out += ",\"class3\":";
    append_double(out, r.class3_extra[0]);
    out += ",\"table1\":{\"row1\":";
    append_double_array(out, r.table1.row1.data(), 2);
    out += ",\"row2\":";
    append_double_array(out, r.table1.row2.data(), 2);
    out += ",\"row3\":";
    append_double_array(out, r.table1.row3.data(), 2);
    out += "},\"mappable\":{\"1\":";
    out += bool_str(mappable[0]);
    out += ",\"2\":";
    out += bool_str(mappable[1]);
    out += ",\"3\":";
    out += bool_str(mappable[2]);
    out += "},\"tolerance\":";
    append_double(out, tolerance);
    out += "}\n";
    return out;
}

namespace {

std::string emit_two_form_block(const std::array<RealForm, 6>& slots) {
    std::string out = "{";
    for (int s = 0; s < 6; ++s) {
        if (s) out += ',';
        out += '"';
        out += kTwoFormKeys[s];
        out += "\":[";
        for (int k = 0; k < 6; ++k) {
            if (k) out += ',';
            append_double(out, slots[static_cast<std::size_t>(s)][kTwoFormMasks[static_cast<std::size_t>(k)]]);
        }
        out += ']';
    }
    out += '}';
    return out;
}

RealForm parse_two_form(const json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != 6)
        throw std::invalid_argument(std::string(what) + ": 2-form needs 6 coefficients");
    RealForm f;
    for (std::size_t k = 0; k < 6; ++k) f[kTwoFormMasks[k]] = number_at(arr[k], what);
    return f;
}

} // namespace

std::string emit_curvature(const CurvatureSample& omega) {
    std::string out = "{\"Omega\":";
    out += emit_two_form_block(omega.slots);
    out += "}\n";
    return out;
}

CurvatureSample parse_curvature(const std::string& text) {
    const json j = parse_json(text, "curvature");
    return [&j]() {
        if (!j.is_object() || !j.contains("Omega"))
            throw std::invalid_argument("curvature: missing \"Omega\"");
        const json& block = j["Omega"];
        if (!block.is_object()) throw std::invalid_argument("curvature: \"Omega\" must be an object");
        CurvatureSample omega;
        for (int s = 0; s < 6; ++s)
            if (block.contains(kTwoFormKeys[s]))
                omega.slots[static_cast<std::size_t>(s)] =
                    parse_two_form(block[kTwoFormKeys[s]], "curvature");
        return omega;
    }();
}

std::string emit_torsion(const TorsionSample& t) {
    std::string out = "{\"Theta\":{";
    for (int a = 0; a < 4; ++a) {
        if (a) out += ',';
        out += '"';
        out += static_cast<char>('0' + a);
        out += "\":[";
        for (int k = 0; k < 6; ++k) {
            if (k) out += ',';
            append_double(out, t.slots[static_cast<std::size_t>(a)][kTwoFormMasks[static_cast<std::size_t>(k)]]);
        }
        out += ']';
    }
    out += "}}\n";
    return out;
}

TorsionSample parse_torsion(const std::string& text) {
    const json j = parse_json(text, "torsion");
    if (!j.is_object() || !j.contains("Theta"))
        throw std::invalid_argument("torsion: missing \"Theta\"");
    const json& block = j["Theta"];
    if (!block.is_object()) throw std::invalid_argument("torsion: \"Theta\" must be an object");
    TorsionSample t;
    for (int a = 0; a < 4; ++a) {
        const std::string key(1, static_cast<char>('0' + a));
        if (block.contains(key))
            t.slots[static_cast<std::size_t>(a)] = parse_two_form(block[key], "torsion");
    }
    return t;
}

std::string emit_actions(const ActionsOutput& a) {
    std::string out = "{\"eh\":";
    append_double(out, a.eh);
    out += ",\"ep\":";
    append_double(out, a.ep);
    out += ",\"holst\":";
    append_double(out, a.holst);
    out += ",\"immirzi\":";
    if (a.has_immirzi)
        append_double(out, a.immirzi);
    else
        out += "null";
    out += ",\"class\":";
    out += std::to_string(a.class_id);
    out += "}\n";
    return out;
}

namespace {

void append_report_body(std::string& out, const VerificationReport& r) {
    out += "{\"suite\":\"";
    out += r.suite;
    out += "\",\"seed\":";
    out += std::to_string(r.seed);
    out += ",\"samples\":";
    out += std::to_string(r.samples);
    out += ",\"max_residual\":";
    append_double(out, r.max_residual);
    out += ",\"tolerance\":";
    append_double(out, r.tolerance);
    out += ",\"passed\":";
    out += bool_str(r.passed);
    out += ",\"failures\":[";
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
        if (i) out += ',';
        out += "{\"sample_index\":";
        out += std::to_string(r.failures[i].sample_index);
        out += ",\"residual\":";
        append_double(out, r.failures[i].residual);
        out += ",\"inputs_digest\":\"";
        out += r.failures[i].inputs_digest;
        out += "\"}";
    }
    out += "]}";
}

} // namespace

std::string emit_report(const VerificationReport& r) {
    std::string out;
    append_report_body(out, r);
    out += '\n';
    return out;
}

std::string emit_reports(const std::vector<VerificationReport>& rs) {
    bool all_passed = true;
    for (const auto& r : rs) all_passed = all_passed && r.passed;
    std::string out = "{\"suite\":\"all\",\"passed\":";
    out += bool_str(all_passed);
    out += ",\"reports\":[";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ',';
        append_report_body(out, rs[i]);
    }
    out += "]}\n";
    return out;
}

void parse_actions_input(const std::string& text, DiracSpinor& psi, CurvatureSample& omega) {
    const json j = parse_json(text, "actions");
    if (!j.is_object() || !j.contains("spinor") || !j.contains("curvature"))
        throw std::invalid_argument("actions: input needs \"spinor\" and \"curvature\"");
    psi = parse_spinor(j["spinor"].dump());
    omega = parse_curvature(j["curvature"].dump());
}

} // namespace spinorforge::jsonio
