// spinorforge: Cl(1,3) spinor classification, ELKO construction, Dirac-to-ELKO
// mapping checks, gravity action densities, and seeded identity-verification
// sweeps. JSON on stdin/stdout; see README for schemas and exit codes.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinorforge/dsf_elko_map.hpp"
#include "spinorforge/errors.hpp"
#include "spinorforge/forms.hpp"
#include "spinorforge/json_io.hpp"
#include "spinorforge/lounesto.hpp"
#include "spinorforge/sampling.hpp"
#include "spinorforge/verify.hpp"

namespace {

using namespace spinorforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

double base_tolerance() {
    if (const char* env = std::getenv("SPINOR_FORGE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0.0) return v;
        std::cerr << "spinorforge: ignoring invalid SPINOR_FORGE_TOL value\n";
    }
    return kDefaultTolerance;
}

int cmd_classify(double tol) {
    DiracSpinor psi;
    try {
        psi = jsonio::parse_spinor(read_stdin());
    } catch (const std::invalid_argument& e) {
        std::cerr << "spinorforge classify: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const ClassificationResult r = classify(psi, tol);
        std::cout << jsonio::emit_classification(r);
        return kExitOk;
    } catch (const ZeroSpinor& e) {
        std::cerr << "spinorforge classify: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InconsistentCovariants& e) {
        std::cerr << "spinorforge classify: " << e.what() << "\n";
        return kExitInconsistent;
    }
}

int cmd_elko(const std::string& type, const std::string& pair, double m, double p, double theta,
             double phi, bool verify) {
    ConjugacyType conj_type;
    if (type == "S")
        conj_type = ConjugacyType::self_conjugate;
    else if (type == "A")
        conj_type = ConjugacyType::anti_self_conjugate;
    else {
        std::cerr << "spinorforge elko: --type must be S or A\n";
        return kExitUsage;
    }
    HelicityPair hel_pair;
    if (pair == "-+")
        hel_pair = HelicityPair::minus_plus;
    else if (pair == "+-")
        hel_pair = HelicityPair::plus_minus;
    else {
        std::cerr << "spinorforge elko: --pair must be -+ or +-\n";
        return kExitUsage;
    }
    try {
        const Momentum momentum = Momentum::make(m, p, theta, phi);
        const ElkoSpinor e = elko(momentum, conj_type, hel_pair);
        if (!verify) {
            std::cout << jsonio::emit_elko(e);
            return kExitOk;
        }
        const ElkoFamily family = elko_family(momentum);
        jsonio::ElkoVerifyBlock block;
        const DiracSpinor c_psi = charge_conjugate(e.psi);
        block.c_eigenvalue = conj_type == ConjugacyType::self_conjugate ? 1 : -1;
        block.c_residual =
            (c_psi - complexd{static_cast<double>(block.c_eigenvalue), 0.0} * e.psi).norm() /
            e.psi.norm();
        block.class_id = classify(e.psi).class_id;
        block.dual_norm = dual_norm(elko_dual(e, family), e.psi).real();
        const ElkoSpinor* members[4] = {&family.self_mp, &family.self_pm, &family.anti_mp,
                                        &family.anti_pm};
        for (int i = 0; i < 4; ++i)
            block.family_norms[static_cast<std::size_t>(i)] =
                dual_norm(elko_dual(*members[i], family), members[i]->psi).real();
        std::cout << jsonio::emit_elko(e, &block);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "spinorforge elko: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_map_check(double tol) {
    DiracSpinor psi;
    try {
        psi = jsonio::parse_spinor(read_stdin());
    } catch (const std::invalid_argument& e) {
        std::cerr << "spinorforge map-check: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        if (psi.norm() <= tol) throw ZeroSpinor("map-check: spinor norm below tolerance");
        const MappingResiduals residuals = mapping_residuals(psi.normalized());
        std::array<bool, 3> mappable{};
        for (int class_id = 1; class_id <= 3; ++class_id)
            mappable[static_cast<std::size_t>(class_id - 1)] =
                is_mappable(psi, class_id, tol).mappable;
        std::cout << jsonio::emit_mapping_report(residuals, mappable, tol);
        return kExitOk;
    } catch (const ZeroSpinor& e) {
        std::cerr << "spinorforge map-check: " << e.what() << "\n";
        return kExitDegenerate;
    }
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<std::uint64_t> samples,
               std::optional<double> tol) {
    if (!known_suite(suite)) {
        std::cerr << "spinorforge verify: unknown suite " << suite << "\n";
        return kExitUsage;
    }
    if (suite == "all") {
        const auto reports = run_all_suites(seed, samples, tol);
        std::cout << jsonio::emit_reports(reports);
        for (const auto& r : reports)
            if (!r.passed) return kExitVerifyFailed;
        return kExitOk;
    }
    const VerificationReport report = run_suite(suite, seed, samples, tol);
    std::cout << jsonio::emit_report(report);
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_actions(bool random_inputs, std::uint64_t seed, double tol) {
    DiracSpinor psi;
    CurvatureSample omega;
    if (random_inputs) {
        SplitMix64 rng = substream(seed, 0);
        psi = random_unit_spinor(rng);
        omega = random_curvature(rng);
    } else {
        try {
            jsonio::parse_actions_input(read_stdin(), psi, omega);
        } catch (const std::invalid_argument& e) {
            std::cerr << "spinorforge actions: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    try {
        const ClassificationResult cls = classify(psi, tol);
        jsonio::ActionsOutput out;
        out.eh = eh_density(omega);
        out.ep = ep_density(omega);
        out.holst = holst_value(psi, omega);
        out.class_id = cls.class_id;
        if (std::abs(cls.covariants.chi) >= tol) {
            out.has_immirzi = true;
            out.immirzi = cls.covariants.sigma / cls.covariants.chi;
        }
        std::cout << jsonio::emit_actions(out);
        return kExitOk;
    } catch (const ZeroSpinor& e) {
        std::cerr << "spinorforge actions: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InconsistentCovariants& e) {
        std::cerr << "spinorforge actions: " << e.what() << "\n";
        return kExitInconsistent;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cl(1,3) spinor classification, ELKO spinors and gravity action densities"};
    app.require_subcommand(1);

    const double tol_default = base_tolerance();

    double classify_tol = tol_default;
    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a spinor from stdin JSON");
    classify_cmd->add_option("--tol", classify_tol, "zero-pattern tolerance");

    std::string elko_type = "S", elko_pair = "-+";
    double elko_m = 1.0, elko_p = 0.0, elko_theta = 0.0, elko_phi = 0.0;
    bool elko_verify = false;
    CLI::App* elko_cmd = app.add_subcommand("elko", "Construct an ELKO spinor");
    elko_cmd->add_option("--type", elko_type, "conjugacy type: S or A");
    elko_cmd->add_option("--pair", elko_pair, "helicity pair: -+ or +-");
    elko_cmd->add_option("--m", elko_m, "mass (natural units)");
    elko_cmd->add_option("--p", elko_p, "momentum magnitude");
    elko_cmd->add_option("--theta", elko_theta, "polar angle");
    elko_cmd->add_option("--phi", elko_phi, "azimuth");
    elko_cmd->add_flag("--verify", elko_verify, "append a verification block");

    double map_tol = tol_default;
    CLI::App* map_cmd =
        app.add_subcommand("map-check", "Evaluate Dirac-to-ELKO mapping residuals");
    map_cmd->add_option("--tol", map_tol, "residual tolerance");

    std::string verify_suite;
    std::uint64_t verify_seed = 42;
    std::uint64_t verify_samples = 0;
    double verify_tol = 0.0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run an identity-verification sweep");
    verify_cmd->add_option("--suite", verify_suite,
                           "qsl-holst, hodge, torsion, fpk, elko-family or all")
        ->required();
    verify_cmd->add_option("--seed", verify_seed, "base seed");
    verify_cmd->add_option("--samples", verify_samples, "sample count (0 = suite default)");
    verify_cmd->add_option("--tol", verify_tol, "tolerance (0 = suite default)");

    bool actions_random = false;
    std::uint64_t actions_seed = 42;
    double actions_tol = tol_default;
    CLI::App* actions_cmd =
        app.add_subcommand("actions", "Compute EH/EP/Holst densities and the Immirzi ratio");
    actions_cmd->add_flag("--random", actions_random, "generate spinor and curvature from --seed");
    actions_cmd->add_option("--seed", actions_seed, "seed for --random");
    actions_cmd->add_option("--tol", actions_tol, "classification tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (classify_cmd->parsed()) return cmd_classify(classify_tol);
    if (elko_cmd->parsed())
        return cmd_elko(elko_type, elko_pair, elko_m, elko_p, elko_theta, elko_phi, elko_verify);
    if (map_cmd->parsed()) return cmd_map_check(map_tol);
    if (verify_cmd->parsed())
        return cmd_verify(verify_suite, verify_seed,
                          verify_samples ? std::optional<std::uint64_t>(verify_samples)
                                         : std::nullopt,
                          verify_tol > 0.0 ? std::optional<double>(verify_tol) : std::nullopt);
    if (actions_cmd->parsed()) return cmd_actions(actions_random, actions_seed, actions_tol);
    return kExitUsage;
}
