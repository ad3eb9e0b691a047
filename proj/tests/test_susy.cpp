#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "msy/reference_levels.hpp"
#include "msy/spectrum.hpp"
#include "msy/susy.hpp"

using namespace msy;

namespace {

EffectiveCoefficients table1_coeffs(double E, double H = 0.0) {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto s = benchmark_spec(SymmetryLimit::pseudospin, PotentialChoice::first, H);
    return effective_coefficients(E, p, s, {1, -1});
}

std::vector<double> coarse_grid() {
    RadialGrid g;
    g.r_min = 0.05;
    g.r_max = 150.0;
    g.points = 2001;
    return g.make();
}

}  // namespace

TEST_CASE("superpotential root for the pure-centrifugal coefficient set") {
    // quad = lin = 0, cst = a^2 gives f = -a (1 +- sqrt(5)) / 2 for C=1, D=-1
    PotentialParams p = benchmark_params(SymmetryLimit::pseudospin);
    const double a = p.alpha;
    EffectiveCoefficients c;
    c.cst = a * a;
    const auto minus = solve_superpotential(c, p, Branch::minus);
    const auto plus = solve_superpotential(c, p, Branch::plus);
    CHECK(minus.f == doctest::Approx(-a * (1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
    CHECK(plus.f == doctest::Approx(-a * (1.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("negative discriminant signals an unphysical region") {
    PotentialParams p = benchmark_params(SymmetryLimit::pseudospin);
    EffectiveCoefficients c;
    c.cst = -1.0;
    CHECK_THROWS_AS(solve_superpotential(c, p, Branch::minus), no_real_superpotential);
}

TEST_CASE("Riccati residual vanishes by construction and detects perturbation") {
    const double E = -5.009375979;
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(E);
    const auto grid = coarse_grid();

    for (Branch b : {Branch::minus, Branch::plus}) {
        const auto sp = solve_superpotential(c, p, b);
        const double res = riccati_residual(sp, c, p, grid);
        CHECK(res <= 1e-8 * (1.0 + 3e5));  // sup |V_eff| on this grid is ~3e5
        CHECK(res <= 1e-6);

        SuperpotentialParams bad = sp;
        bad.f += 0.1;
        CHECK(riccati_residual(bad, c, p, grid) > 100.0 * std::max(res, 1e-12));
    }
}

TEST_CASE("superpotential shape") {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(-5.009375979);
    const auto sp = solve_superpotential(c, p, Branch::minus);

    // tail limit: the Mobius term dies, only g remains
    CHECK(superpotential(5e4, sp, p) == doctest::Approx(sp.g).epsilon(1e-12));

    SuperpotentialParams constant{0.0, 1.3, Branch::minus};
    for (double r : {0.1, 1.0, 10.0}) {
        CHECK(superpotential(r, constant, p) == doctest::Approx(1.3));
        CHECK(superpotential_derivative(r, constant, p) == 0.0);
    }
}

TEST_CASE("partner potentials restate the Riccati equation") {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(-5.009375979);
    const auto sp = solve_superpotential(c, p, Branch::minus);
    const auto grid = coarse_grid();
    const auto [vplus, vminus] = partner_potentials(sp, p, grid);
    const double e0 = c.cst - sp.g * sp.g;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double veff = effective_potential(grid[i], c, p);
        const double scale = 1.0 + std::abs(veff);
        CHECK(vminus[i] + e0 == doctest::Approx(veff).epsilon(1e-10).scale(scale));
        const double dphi = superpotential_derivative(grid[i], sp, p);
        CHECK(vplus[i] - vminus[i] == doctest::Approx(2.0 * dphi).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("shape-invariance remainders telescope") {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(-5.009375979);
    const auto sp = solve_superpotential(c, p, Branch::minus);

    CHECK(shape_invariance_remainders(sp.f, c, p, 0).empty());

    const int n = 6;
    const auto rem = shape_invariance_remainders(sp.f, c, p, n);
    REQUIRE(static_cast<int>(rem.size()) == n);
    double total = 0.0;
    for (double rk : rem) total += rk;
    const double an = sp.f + n * shape_parameter_step(p);
    const double w0 = superpotential_tail(sp.f, c, p);
    const double wn = superpotential_tail(an, c, p);
    CHECK(total == doctest::Approx(w0 * w0 - wn * wn).epsilon(1e-12));

    // partial sums reproduce the closed-form effective eigenvalues
    double partial = 0.0;
    for (int k = 1; k <= n; ++k) {
        partial += rem[k - 1];
        const double e0 = c.cst - w0 * w0;
        CHECK(partial + e0
              == doctest::Approx(closed_form_effective_energy(k, c, p, Branch::minus))
                     .epsilon(1e-12));
    }
}

TEST_CASE("ground-state closed form is cst - g^2") {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(-5.009375979);
    for (Branch b : {Branch::minus, Branch::plus}) {
        const auto sp = solve_superpotential(c, p, b);
        CHECK(closed_form_effective_energy(0, c, p, b)
              == doctest::Approx(c.cst - sp.g * sp.g).epsilon(1e-13));
    }
}

TEST_CASE("closed form reproduces the benchmark anchors") {
    // table 1, state (1,-1), H = 0
    {
        const double E = -5.009375979;
        const auto c = table1_coeffs(E);
        const auto p = benchmark_params(SymmetryLimit::pseudospin);
        const double closed = closed_form_effective_energy(1, c, p, Branch::minus);
        // the anchor energy carries 10 printed digits -> ~5e-9 absolute in E^2
        CHECK(closed == doctest::Approx(E * E - 25.0).epsilon(1e-6));
    }
    // table 2, state (0,-2), H = 0
    {
        const double E = 5.001904476;
        const auto p = benchmark_params(SymmetryLimit::spin);
        const auto s = benchmark_spec(SymmetryLimit::spin, PotentialChoice::first);
        const auto c = effective_coefficients(E, p, s, {0, -2});
        const double closed = closed_form_effective_energy(0, c, p, Branch::minus);
        CHECK(closed == doctest::Approx(E * E - 25.0).epsilon(1e-6));
    }
}

TEST_CASE("degenerate stepped parameter is rejected") {
    PotentialParams p = benchmark_params(SymmetryLimit::pseudospin);
    const auto c = table1_coeffs(-5.0);
    CHECK_THROWS_AS(superpotential_tail(0.0, c, p), std::domain_error);
    // force a_k = 0 at k = 1: a0 = -step
    CHECK_THROWS_AS(shape_invariance_remainders(-shape_parameter_step(p), c, p, 3),
                    std::domain_error);
}
