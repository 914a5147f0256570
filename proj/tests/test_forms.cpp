#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinorforge/errors.hpp"
#include "spinorforge/forms.hpp"
#include "spinorforge/lounesto.hpp"
#include "spinorforge/sampling.hpp"

using namespace spinorforge;

namespace {

RealForm random_real_form(SplitMix64& rng) {
    RealForm f;
    for (int m = 0; m < kFormBasisSize; ++m) f[m] = rng.gaussian();
    return f;
}

CliffordElement random_element(SplitMix64& rng) {
    CliffordElement e;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e.at(r, c) = complexd{rng.gaussian(), rng.gaussian()};
    return e;
}

CliffordForm random_clifford_form(SplitMix64& rng) {
    CliffordForm f;
    for (int m = 0; m < kFormBasisSize; ++m) f[m] = random_element(rng);
    return f;
}

double form_diff(const CliffordForm& a, const CliffordForm& b) {
    double m = 0.0;
    for (int mask = 0; mask < kFormBasisSize; ++mask)
        m = std::max(m, a[mask].max_abs_diff(b[mask]));
    return m;
}

} // namespace

TEST_CASE("wedge of Clifford-valued basis forms") {
    CliffordForm a, b;
    a[0b0001] = gamma_lower(0);
    b[0b0010] = gamma_lower(1);
    const CliffordForm w = wedge(a, b);
    CHECK(w[0b0011].max_abs_diff(gamma_lower(0) * gamma_lower(1)) == 0.0);
    for (int mask = 0; mask < kFormBasisSize; ++mask)
        if (mask != 0b0011) CHECK(w[mask].max_abs() == 0.0);
}

TEST_CASE("a scalar-coefficient 1-form wedges to zero with itself") {
    SplitMix64 rng(41);
    CliffordForm f;
    for (int a = 0; a < 4; ++a)
        f[1 << a] = complexd{rng.gaussian(), 0.0} * CliffordElement::identity();
    CHECK(wedge(f, f).max_abs() < 1e-15);
}

TEST_CASE("coframe wedge squared gives twice the bivector basis") {
    const CliffordForm theta = coframe_form();
    const CliffordForm sq = wedge(theta, theta);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const CliffordElement expected =
                gamma_lower(a) * gamma_lower(b) - gamma_lower(b) * gamma_lower(a);
            CHECK(sq[(1 << a) | (1 << b)].max_abs_diff(expected) == 0.0);
        }
    CHECK(sq[0].max_abs() == 0.0);
    CHECK(sq[kVolumeMask].max_abs() == 0.0);
}

TEST_CASE("wedge is associative on random Clifford forms") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const CliffordForm a = random_clifford_form(rng);
        const CliffordForm b = random_clifford_form(rng);
        const CliffordForm c = random_clifford_form(rng);
        const CliffordForm left = wedge(wedge(a, b), c);
        const CliffordForm right = wedge(a, wedge(b, c));
        const double scale = std::max(1.0, a.max_abs() * b.max_abs() * c.max_abs());
        CHECK(form_diff(left, right) < 1e-12 * scale);
    }
}

TEST_CASE("wedge is graded commutative on real forms") {
    SplitMix64 rng(45);
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4 - p; ++q) {
            RealForm a, b;
            for (int m = 0; m < kFormBasisSize; ++m) {
                if (form_degree(m) == p) a[m] = rng.gaussian();
                if (form_degree(m) == q) b[m] = rng.gaussian();
            }
            RealForm diff = wedge(a, b);
            RealForm flipped = wedge(b, a);
            flipped *= (p * q % 2 == 0) ? 1.0 : -1.0;
            diff -= flipped;
            CHECK(diff.max_abs() < 1e-13);
        }
    }
}

TEST_CASE("degree bookkeeping") {
    SplitMix64 rng(47);
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4; ++q) {
            RealForm a, b;
            for (int m = 0; m < kFormBasisSize; ++m) {
                if (form_degree(m) == p) a[m] = rng.gaussian();
                if (form_degree(m) == q) b[m] = rng.gaussian();
            }
            const RealForm w = wedge(a, b);
            if (p + q > 4) {
                CHECK(w.max_abs() == 0.0);
            } else {
                for (int m = 0; m < kFormBasisSize; ++m)
                    if (w[m] != 0.0) CHECK(form_degree(m) == p + q);
            }
        }
    }
}

TEST_CASE("hodge star against the defining-relation oracle") {
    // Independent oracle: solve xi ^ star(zeta) = G(xi, zeta) tau for the
    // coefficients of star(zeta) exhaustively over each degree's basis.
    for (int j = 0; j < kFormBasisSize; ++j) {
        RealForm oracle;
        for (int i = 0; i < kFormBasisSize; ++i) {
            if (form_degree(i) != form_degree(j)) continue;
            const int comp = kVolumeMask & ~i;
            double g = 0.0;
            if (i == j) {
                g = 1.0;
                for (int a = 0; a < 4; ++a)
                    if (i & (1 << a)) g *= (a == 0 ? 1.0 : -1.0);
            }
            // theta^i ^ (x * theta^comp) = x * sign * tau  =>  x = g * sign
            oracle[comp] += g * wedge_sign(i, comp);
        }
        RealForm got = hodge_star(RealForm::basis(j));
        got -= oracle;
        CHECK(got.max_abs() == 0.0);
    }
}

TEST_CASE("hodge star pinned values") {
    const RealForm star1 = hodge_star(RealForm::basis(0));
    CHECK(star1[kVolumeMask] == 1.0); // star 1 = tau

    const RealForm star01 = hodge_star(RealForm::basis(0b0011));
    CHECK(star01[0b1100] == -1.0); // star(theta^01) = -theta^23

    const RealForm star_tau = hodge_star(RealForm::basis(kVolumeMask));
    CHECK(star_tau[0] == -1.0);

    for (int m : kTwoFormMasks) {
        RealForm twice = hodge_star(hodge_star(RealForm::basis(m)));
        twice += RealForm::basis(m); // star star = -1 on 2-forms
        CHECK(twice.max_abs() == 0.0);
    }

    RealForm mixed;
    mixed[0b0001] = 1.0;
    mixed[0b0011] = 1.0;
    CHECK_THROWS_AS(hodge_star(mixed), std::invalid_argument);
}

TEST_CASE("hodge star on Clifford forms requires scalar coefficients") {
    CliffordForm ok;
    ok[0b0011] = complexd{2.0, 0.0} * CliffordElement::identity();
    const CliffordForm starred = hodge_star(ok);
    CHECK(starred[0b1100].max_abs_diff(complexd{-2.0, 0.0} * CliffordElement::identity()) == 0.0);

    CliffordForm bad;
    bad[0b0011] = gamma(1);
    CHECK_THROWS_AS(hodge_star(bad), std::invalid_argument);
}

TEST_CASE("interior product basics") {
    const RealForm t0 = RealForm::basis(0b0001);
    const RealForm t1 = RealForm::basis(0b0010);
    CHECK(interior(0, t0)[0] == 1.0);
    CHECK(interior(0, t1).max_abs() == 0.0);

    const RealForm t01 = RealForm::basis(0b0011);
    const RealForm contracted = interior(0, t01);
    CHECK(contracted[0b0010] == 1.0); // e_0 . (theta^0 ^ theta^1) = theta^1

    SplitMix64 rng(53);
    const RealForm xi = random_real_form(rng);
    for (int a = 0; a < 4; ++a) CHECK(interior(a, interior(a, xi)).max_abs() == 0.0);
}

TEST_CASE("interior product on Clifford-valued forms") {
    const CliffordForm theta = coframe_form();
    for (int a = 0; a < 4; ++a) {
        const CliffordForm contracted = interior(a, theta);
        CHECK(contracted[0].max_abs_diff(gamma_lower(a)) == 0.0);
        for (int mask = 1; mask < kFormBasisSize; ++mask)
            CHECK(contracted[mask].max_abs() == 0.0);
    }
    CHECK_THROWS_AS(interior(4, theta), std::out_of_range);
}

TEST_CASE("interior product is a graded antiderivation") {
    SplitMix64 rng(59);
    for (int p = 0; p <= 3; ++p) {
        RealForm a, b;
        for (int m = 0; m < kFormBasisSize; ++m) {
            if (form_degree(m) == p) a[m] = rng.gaussian();
            if (form_degree(m) <= 4 - p) b[m] = rng.gaussian();
        }
        for (int v = 0; v < 4; ++v) {
            RealForm lhs = interior(v, wedge(a, b));
            RealForm rhs = wedge(interior(v, a), b);
            RealForm second = wedge(a, interior(v, b));
            second *= (p % 2 == 0) ? 1.0 : -1.0;
            rhs += second;
            lhs -= rhs;
            CHECK(lhs.max_abs() < 1e-13);
        }
    }
}

TEST_CASE("torsion decomposition: completeness, idempotence, annihilation") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const TorsionSample t = random_torsion(rng);
        const TorsionParts parts = torsion_decompose(t);
        const double scale = std::max(1.0, t.max_abs());

        TorsionSample sum = parts.tentor;
        for (int a = 0; a < 4; ++a) {
            sum.slots[static_cast<std::size_t>(a)] += parts.trator.slots[static_cast<std::size_t>(a)];
            sum.slots[static_cast<std::size_t>(a)] += parts.axitor.slots[static_cast<std::size_t>(a)];
        }
        CHECK(sum.nearly_equal(t, 1e-14 * scale));

        const TorsionParts of_trator = torsion_decompose(parts.trator);
        CHECK(of_trator.trator.nearly_equal(parts.trator, 1e-12 * scale));
        CHECK(of_trator.tentor.max_abs() < 1e-12 * scale);
        CHECK(of_trator.axitor.max_abs() < 1e-12 * scale);

        const TorsionParts of_axitor = torsion_decompose(parts.axitor);
        CHECK(of_axitor.axitor.nearly_equal(parts.axitor, 1e-12 * scale));
        CHECK(of_axitor.tentor.max_abs() < 1e-12 * scale);
        CHECK(of_axitor.trator.max_abs() < 1e-12 * scale);

        const TorsionParts of_tentor = torsion_decompose(parts.tentor);
        CHECK(of_tentor.tentor.nearly_equal(parts.tentor, 1e-12 * scale));
        CHECK(of_tentor.trator.max_abs() < 1e-12 * scale);
        CHECK(of_tentor.axitor.max_abs() < 1e-12 * scale);

        CHECK(axial_torsion(parts.trator).max_abs() < 1e-12 * scale);
    }

    const TorsionSample zero{};
    const TorsionParts z = torsion_decompose(zero);
    CHECK(z.tentor.max_abs() == 0.0);
    CHECK(z.trator.max_abs() == 0.0);
    CHECK(z.axitor.max_abs() == 0.0);
    CHECK(axial_torsion(zero).max_abs() == 0.0);
}

TEST_CASE("axial round trip through the axitor projector") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        RealForm a;
        for (int v = 0; v < 4; ++v) a[1 << v] = rng.gaussian();
        TorsionSample axitor;
        for (int slot = 0; slot < 4; ++slot) {
            RealForm part = hodge_star(wedge(RealForm::basis(1 << slot), a));
            part *= -1.0 / 3.0;
            axitor.slots[static_cast<std::size_t>(slot)] = part;
        }
        RealForm recovered = axial_torsion(axitor);
        recovered -= a;
        CHECK(recovered.max_abs() < 1e-13 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("density values on single-slot curvatures") {
    CurvatureSample o1{};
    o1.slots[0][0b0011] = 1.0; // Omega^{01} = theta^0 ^ theta^1
    CHECK(eh_density(o1) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(ep_density(o1) == doctest::Approx(0.0).epsilon(1e-14));

    CurvatureSample o2{};
    o2.slots[0][0b1100] = 1.0; // Omega^{01} = theta^2 ^ theta^3
    CHECK(eh_density(o2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ep_density(o2) == doctest::Approx(2.0).epsilon(1e-14));

    CHECK(eh_density(CurvatureSample{}) == 0.0);
    CHECK(ep_density(CurvatureSample{}) == 0.0);
}

TEST_CASE("densities agree with the metric-contraction oracle") {
    // From the defining relation, eh = -2 sum_{a<b} Omega^{ab}[ab-component]
    // and ep picks the complementary component with a reordering sign.
    SplitMix64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const CurvatureSample omega = random_curvature(rng);
        double eh_oracle = 0.0;
        double ep_oracle = 0.0;
        int slot = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b, ++slot) {
                const int mask = (1 << a) | (1 << b);
                const int comp = kVolumeMask & ~mask;
                eh_oracle += -2.0 * omega.slots[static_cast<std::size_t>(slot)][mask];
                const double eta = (a == 0 ? 1.0 : -1.0) * -1.0; // eta_aa eta_bb, b > 0 always
                ep_oracle += -2.0 * eta * omega.slots[static_cast<std::size_t>(slot)][comp] *
                             wedge_sign(comp, mask);
            }
        CHECK(std::abs(eh_density(omega) - eh_oracle) < 1e-12 * (std::abs(eh_oracle) + 1.0));
        CHECK(std::abs(ep_density(omega) - ep_oracle) < 1e-12 * (std::abs(ep_oracle) + 1.0));
    }
}

TEST_CASE("density linearity") {
    SplitMix64 rng(73);
    const CurvatureSample omega = random_curvature(rng);
    CurvatureSample scaled = omega;
    for (auto& slot : scaled.slots) slot *= 2.5;
    CHECK(eh_density(scaled) == doctest::Approx(2.5 * eh_density(omega)));
    CHECK(ep_density(scaled) == doctest::Approx(2.5 * ep_density(omega)));
}

TEST_CASE("antisymmetric curvature access") {
    SplitMix64 rng(79);
    const CurvatureSample omega = random_curvature(rng);
    RealForm sum = omega.omega_upper(1, 0);
    sum += omega.omega_upper(0, 1);
    CHECK(sum.max_abs() == 0.0);
    CHECK_THROWS_AS(omega.omega_upper(1, 1), std::out_of_range);
}

TEST_CASE("central identity: the curvature term is the weighted EH + EP combination") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        const DiracSpinor psi = random_unit_spinor(rng);
        const CurvatureSample omega = random_curvature(rng);
        const BilinearCovariants b = bilinears(psi);
        const double expected = b.sigma * eh_density(omega) + b.chi * ep_density(omega);
        const double got = qsl_curvature_term(psi, omega);
        CHECK(std::abs(got - expected) < 1e-10 * std::max({std::abs(expected), std::abs(got), 1.0}));
    }
}

TEST_CASE("curvature term on normalized spinors lands exactly on the densities") {
    CurvatureSample mixed{};
    mixed.slots[0][0b0011] = 1.0;
    mixed.slots[0][0b1100] = 0.5;
    mixed.slots[3][0b0101] = -0.8; // Omega^{12} slot

    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    const DiracSpinor class2{{inv_rt2, 0.0, inv_rt2, 0.0}}; // sigma = 1, chi = 0
    CHECK(qsl_curvature_term(class2, mixed) ==
          doctest::Approx(eh_density(mixed)).epsilon(1e-12));

    const DiracSpinor class3{{inv_rt2, 0.0, complexd{0.0, inv_rt2}, 0.0}}; // sigma = 0, chi = 1
    const BilinearCovariants b3 = bilinears(class3);
    CHECK(b3.chi == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(b3.sigma) < 1e-14);
    CHECK(qsl_curvature_term(class3, mixed) ==
          doctest::Approx(ep_density(mixed)).epsilon(1e-12));
}

TEST_CASE("the gamma5 pseudoscalar placement is the failing alternative") {
    // With the chirality matrix in the pseudoscalar slot the 4-form coefficient
    // is purely imaginary: -i times the pinned result.
    SplitMix64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        const DiracSpinor psi = random_unit_spinor(rng);
        const CurvatureSample omega = random_curvature(rng);
        const complexd raw = qsl_curvature_term_gamma5_raw(psi, omega);
        const double pinned = qsl_curvature_term(psi, omega);
        const double scale = std::max(1.0, std::abs(pinned));
        CHECK(std::abs(raw.real()) < 1e-10 * scale);
        CHECK(std::abs(raw.imag() + pinned) < 1e-10 * scale);
    }
}

TEST_CASE("holst combination and Immirzi ratio") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        const DiracSpinor psi = random_unit_spinor(rng);
        const CurvatureSample omega = random_curvature(rng);
        CHECK(std::abs(holst_value(psi, omega) + qsl_curvature_term(psi, omega)) <
              1e-10 * std::max(1.0, std::abs(holst_value(psi, omega))));
    }

    for (int trial = 0; trial < 50; ++trial) {
        const DiracSpinor psi = random_unit_spinor(rng); // class 1 with probability ~1
        const CurvatureSample omega = random_curvature(rng);
        const BilinearCovariants b = bilinears(psi);
        if (std::abs(b.chi) < 1e-6) continue;
        const HolstResult h = holst_density(psi, omega);
        CHECK(std::abs(h.immirzi - b.sigma / b.chi) < 1e-12 * std::abs(h.immirzi));
        CHECK(h.density == doctest::Approx(holst_value(psi, omega)));
    }

    // Class-2 spinors have chi = 0: the ratio is undefined.
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    const DiracSpinor class2{{inv_rt2, 0.0, inv_rt2, 0.0}};
    SplitMix64 rng2(101);
    CHECK_THROWS_AS(holst_density(class2, random_curvature(rng2)), ImmirziUndefined);

    // Class-1 spinor with sigma = chi gives ratio 1.
    DiracSpinor equal_weights{{1.0, 0.0, complexd{0.5, 0.5}, 0.0}};
    const BilinearCovariants be = bilinears(equal_weights);
    CHECK(be.sigma == doctest::Approx(be.chi));
    const HolstResult he = holst_density(equal_weights, random_curvature(rng2));
    CHECK(he.immirzi == doctest::Approx(1.0).epsilon(1e-12));
}
