#include "spinorforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "spinorforge/dsf_elko_map.hpp"
#include "spinorforge/forms.hpp"
#include "spinorforge/json_io.hpp"
#include "spinorforge/lounesto.hpp"
#include "spinorforge/sampling.hpp"

namespace spinorforge {

namespace {

constexpr std::size_t kMaxFailureRecords = 16;

std::string digest_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string digest_doubles(const double* v, std::size_t n) {
    std::string bytes;
    for (std::size_t i = 0; i < n; ++i) {
        bytes += jsonio::format_double(v[i]);
        bytes += ',';
    }
    return digest_hex(fnv1a64(bytes.data(), bytes.size()));
}

std::string digest_spinor(const DiracSpinor& psi) {
    double v[8];
    for (int k = 0; k < 4; ++k) {
        v[2 * k] = psi[k].real();
        v[2 * k + 1] = psi[k].imag();
    }
    return digest_doubles(v, 8);
}

void record(VerificationReport& report, std::uint64_t index, double residual,
            const std::string& digest) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual >= report.tolerance && report.failures.size() < kMaxFailureRecords)
        report.failures.push_back({index, residual, digest});
}

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-6});
    return std::abs(a - b) / scale;
}

VerificationReport make_report(const std::string& suite, std::uint64_t seed, std::uint64_t samples,
                               double tol) {
    VerificationReport r;
    r.suite = suite;
    r.seed = seed;
    r.samples = samples;
    r.tolerance = tol;
    return r;
}

VerificationReport run_qsl_holst(std::uint64_t seed, std::uint64_t samples, double tol) {
    VerificationReport report = make_report("qsl-holst", seed, samples, tol);
    for (std::uint64_t k = 0; k < samples; ++k) {
        SplitMix64 rng = substream(seed, k);
        const DiracSpinor psi = random_unit_spinor(rng);
        const CurvatureSample omega = random_curvature(rng);
        const BilinearCovariants b = bilinears(psi);
        const double eh = eh_density(omega);
        const double ep = ep_density(omega);
        const double qsl = qsl_curvature_term(psi, omega);
        const double target = b.sigma * eh + b.chi * ep;

        double residual = rel_diff(qsl, target);
        residual = std::max(residual, rel_diff(holst_value(psi, omega), -qsl));

        // Normalized class-2 and class-3 spinors must land exactly on the
        // EH and EP densities respectively.
        const DiracSpinor psi2 = random_class2_spinor(rng, true);
        residual = std::max(residual, rel_diff(qsl_curvature_term(psi2, omega), eh));
        const DiracSpinor psi3 = random_class3_spinor(rng, true);
        residual = std::max(residual, rel_diff(qsl_curvature_term(psi3, omega), ep));

        record(report, k, residual, digest_spinor(psi));
    }
    report.passed = report.max_residual < report.tolerance;
    return report;
}

VerificationReport run_hodge(std::uint64_t seed, double tol) {
    VerificationReport report = make_report("hodge", seed, 0, tol);
    std::uint64_t pairs = 0;
    for (int i = 0; i < kFormBasisSize; ++i) {
        for (int j = 0; j < kFormBasisSize; ++j) {
            if (form_degree(i) != form_degree(j)) continue;
            ++pairs;
            const RealForm lhs = wedge(RealForm::basis(i), hodge_star(RealForm::basis(j)));
            // G(theta^I, theta^J) is diagonal on the orthonormal basis.
            double g = 0.0;
            if (i == j) {
                g = 1.0;
                for (int a = 0; a < 4; ++a)
                    if (i & (1 << a)) g *= (a == 0 ? 1.0 : -1.0);
            }
            RealForm rhs;
            rhs[kVolumeMask] = g;
            RealForm diff = lhs;
            diff -= rhs;
            record(report, pairs - 1, diff.max_abs(), digest_doubles(&g, 1));
        }
    }
    report.samples = pairs;
    report.passed = report.max_residual < report.tolerance;
    return report;
}

double torsion_scale(const TorsionSample& t) { return std::max(t.max_abs(), 1.0); }

double decomposition_residual(const TorsionSample& t) {
    const TorsionParts parts = torsion_decompose(t);
    const double scale = torsion_scale(t);
    double res = 0.0;

    // Completeness.
    for (int a = 0; a < 4; ++a) {
        RealForm sum = parts.tentor.slots[static_cast<std::size_t>(a)];
        sum += parts.trator.slots[static_cast<std::size_t>(a)];
        sum += parts.axitor.slots[static_cast<std::size_t>(a)];
        sum -= t.slots[static_cast<std::size_t>(a)];
        res = std::max(res, sum.max_abs() / scale);
    }

    // Projector behavior on each part: same part reproduced, other parts vanish.
    const TorsionSample* own[3] = {&parts.tentor, &parts.trator, &parts.axitor};
    for (int which = 0; which < 3; ++which) {
        const TorsionParts again = torsion_decompose(*own[which]);
        const TorsionSample* sub[3] = {&again.tentor, &again.trator, &again.axitor};
        for (int piece = 0; piece < 3; ++piece) {
            for (int a = 0; a < 4; ++a) {
                RealForm d = sub[piece]->slots[static_cast<std::size_t>(a)];
                if (piece == which) d -= own[which]->slots[static_cast<std::size_t>(a)];
                res = std::max(res, d.max_abs() / scale);
            }
        }
    }

    // The axial 1-form of the pure trace part vanishes; trace of the axial part vanishes.
    res = std::max(res, axial_torsion(parts.trator).max_abs() / scale);
    {
        RealForm trace1;
        for (int b = 0; b < 4; ++b)
            trace1 += interior(b, parts.axitor.slots[static_cast<std::size_t>(b)]);
        res = std::max(res, trace1.max_abs() / scale);
    }
    return res;
}

VerificationReport run_torsion(std::uint64_t seed, std::uint64_t samples, double tol) {
    VerificationReport report = make_report("torsion", seed, samples, tol);
    for (std::uint64_t k = 0; k < samples; ++k) {
        SplitMix64 rng = substream(seed, k);
        const TorsionSample t = random_torsion(rng);
        double first = t.slots[0][kTwoFormMasks[0]];
        record(report, k, decomposition_residual(t), digest_doubles(&first, 1));
    }
    report.passed = report.max_residual < report.tolerance;
    return report;
}

VerificationReport run_fpk(std::uint64_t seed, std::uint64_t samples, double tol) {
    VerificationReport report = make_report("fpk", seed, samples, tol);
    for (std::uint64_t k = 0; k < samples; ++k) {
        SplitMix64 rng = substream(seed, k);
        const DiracSpinor psi = random_unit_spinor(rng);
        const BilinearCovariants b = bilinears(psi);
        const double jj = minkowski_square(b.J);
        const double kk = minkowski_square(b.K);
        const double jk = minkowski_dot(b.J, b.K);
        double residual = std::abs(jj - (b.sigma * b.sigma + b.chi * b.chi));
        residual = std::max(residual, std::abs(jk));
        residual = std::max(residual, std::abs(kk + jj));
        record(report, k, residual, digest_spinor(psi));
    }
    report.passed = report.max_residual < report.tolerance;
    return report;
}

VerificationReport run_elko_family(std::uint64_t seed, std::uint64_t samples, double tol) {
    VerificationReport report = make_report("elko-family", seed, samples, tol);
    for (std::uint64_t k = 0; k < samples; ++k) {
        SplitMix64 rng = substream(seed, k);
        const Momentum momentum = random_momentum(rng);
        const ElkoFamily family = elko_family(momentum);
        const ElkoSpinor* members[4] = {&family.self_mp, &family.self_pm, &family.anti_mp,
                                        &family.anti_pm};
        double residual = 0.0;
        int positive_norms = 0;

        for (const ElkoSpinor* lam : members) {
            const double norm = lam->psi.norm();
            // Charge-conjugation eigenvalue with the sign of the type.
            const DiracSpinor c_psi = charge_conjugate(lam->psi);
            const double sign = lam->type == ConjugacyType::self_conjugate ? 1.0 : -1.0;
            residual = std::max(
                residual, (c_psi - complexd{sign, 0.0} * lam->psi).norm() / norm);

            // Flagpole pattern and null currents after unit normalization.
            const DiracSpinor unit = lam->psi.normalized();
            const BilinearCovariants b = bilinears(unit);
            residual = std::max({residual, std::abs(b.sigma), std::abs(b.chi), b.max_abs_K()});
            residual = std::max(residual, std::abs(minkowski_square(b.J)));
            residual = std::max(residual, std::abs(minkowski_square(b.K)));
            if (b.max_abs_S() <= 1e-3 || b.max_abs_J() <= 1e-3) residual = std::max(residual, 1.0);
            if (classify(unit).class_id != 5) residual = std::max(residual, 1.0);

            // Blockwise boost equals the scalar-factor form on dual-helicity states.
            const int upper_sign = lam->pair == HelicityPair::minus_plus ? -1 : 1;
            const DiracSpinor rest = elko_rest(
                lam->type, lam->pair, Momentum::rest(momentum.m, momentum.theta, momentum.phi));
            const double e = momentum.energy();
            const double factor = (e + momentum.m + upper_sign * momentum.p_mag) /
                                  std::sqrt(2.0 * momentum.m * (e + momentum.m));
            residual = std::max(
                residual, (lam->psi - complexd{factor, 0.0} * rest).norm() / lam->psi.norm());

            // Dual norms: real, invariant, +-2m.
            const complexd n = dual_norm(elko_dual(*lam, family), lam->psi);
            residual = std::max(residual, std::abs(n.imag()) / (2.0 * momentum.m));
            residual = std::max(residual,
                                std::abs(std::abs(n.real()) - 2.0 * momentum.m) / (2.0 * momentum.m));
            if (n.real() > 0.0) ++positive_norms;

            // Opposite helicities in the two blocks.
            const auto p_hat = momentum.unit_direction();
            const TwoSpinor hu = helicity_apply(lam->psi.upper(), p_hat);
            const TwoSpinor hl = helicity_apply(lam->psi.lower(), p_hat);
            const TwoSpinor u = lam->psi.upper();
            const TwoSpinor l = lam->psi.lower();
            const double us = static_cast<double>(upper_sign);
            residual = std::max(residual,
                                std::hypot(std::abs(hu[0] - us * u[0]), std::abs(hu[1] - us * u[1])) / norm);
            residual = std::max(residual,
                                std::hypot(std::abs(hl[0] + us * l[0]), std::abs(hl[1] + us * l[1])) / norm);
        }
        if (positive_norms != 2) residual = std::max(residual, 1.0);

        double kin[2] = {momentum.m, momentum.p_mag};
        record(report, k, residual, digest_doubles(kin, 2));
    }
    report.passed = report.max_residual < report.tolerance;
    return report;
}

} // namespace

bool known_suite(const std::string& name) {
    return name == "qsl-holst" || name == "hodge" || name == "torsion" || name == "fpk" ||
           name == "elko-family" || name == "all";
}

std::uint64_t default_samples(const std::string& suite) {
    if (suite == "qsl-holst") return 200;
    if (suite == "torsion") return 100;
    if (suite == "fpk") return 500;
    if (suite == "elko-family") return 200;
    return 0; // hodge: exhaustive
}

double default_tolerance(const std::string& suite) {
    if (suite == "qsl-holst") return 1e-10;
    if (suite == "hodge") return 1e-15;
    if (suite == "torsion") return 1e-12;
    if (suite == "fpk") return 1e-9;
    if (suite == "elko-family") return 1e-10;
    return 1e-9;
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed,
                             std::optional<std::uint64_t> samples, std::optional<double> tol) {
    const std::uint64_t n = samples.value_or(default_samples(suite));
    const double t = tol.value_or(default_tolerance(suite));
    if (suite == "qsl-holst") return run_qsl_holst(seed, n, t);
    if (suite == "hodge") return run_hodge(seed, t);
    if (suite == "torsion") return run_torsion(seed, n, t);
    if (suite == "fpk") return run_fpk(seed, n, t);
    if (suite == "elko-family") return run_elko_family(seed, n, t);
    throw std::invalid_argument("run_suite: unknown suite " + suite);
}

std::vector<VerificationReport> run_all_suites(std::uint64_t seed,
                                               std::optional<std::uint64_t> samples,
                                               std::optional<double> tol) {
    std::vector<VerificationReport> out;
    for (const char* name : {"qsl-holst", "hodge", "torsion", "fpk", "elko-family"})
        out.push_back(run_suite(name, seed, samples, tol));
    return out;
}

} // namespace spinorforge
