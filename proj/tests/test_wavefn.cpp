#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "msy/reference_levels.hpp"
#include "msy/wavefn.hpp"

using namespace msy;

namespace {

// independent oracle: the Gamma-function series of P_n^{(a,b)} around x = 1
double jacobi_series(int n, double a, double b, double x) {
    double total = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double log_binom = std::lgamma(n + 1.0) - std::lgamma(m + 1.0)
                                 - std::lgamma(n - m + 1.0);
        const double log_head = std::lgamma(a + n + 1.0) - std::lgamma(a + m + 1.0)
                                + std::lgamma(a + b + n + m + 1.0)
                                - std::lgamma(a + b + n + 1.0);
        const double coeff = std::exp(log_binom + log_head - std::lgamma(n + 1.0));
        total += coeff * std::pow((x - 1.0) / 2.0, m);
    }
    return total;
}

BoundState table_state(int table, int n, int kappa, double H) {
    const auto lvls = reference_levels(table);
    const auto p = benchmark_params(lvls.front().limit);
    const auto s = benchmark_spec(lvls.front().limit, lvls.front().choice, H);
    return solve_energy({n, kappa}, p, s);
}

}  // namespace

TEST_CASE("Jacobi polynomial special degrees") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> par(-0.8, 4.0), arg(-1.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const double a = par(rng), b = par(rng), x = arg(rng);
        CHECK(jacobi(0, a, b, x) == 1.0);
        CHECK(jacobi(1, a, b, x)
              == doctest::Approx((a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(jacobi(-1, 0.5, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(jacobi(2, -1.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("Jacobi recurrence against the series oracle") {
    CHECK(jacobi(3, 0.5, 1.5, 0.3) == doctest::Approx(jacobi_series(3, 0.5, 1.5, 0.3)).epsilon(1e-12));
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> par(-0.5, 3.0), arg(-0.95, 0.95);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + i % 6;
        const double a = par(rng), b = par(rng), x = arg(rng);
        CHECK(jacobi(n, a, b, x) == doctest::Approx(jacobi_series(n, a, b, x)).epsilon(1e-10));
    }
}

TEST_CASE("analytic Jacobi derivative against finite differences") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> par(-0.5, 3.0), arg(-0.9, 0.9);
    for (int i = 0; i < 20; ++i) {
        const int n = i % 6;
        const double a = par(rng), b = par(rng), x = arg(rng);
        const double h = 1e-6;
        const double fd = (jacobi(n, a, b, x + h) - jacobi(n, a, b, x - h)) / (2.0 * h);
        const double an = jacobi_derivative(n, a, b, x);
        CHECK(an == doctest::Approx(fd).epsilon(1e-6).scale(1.0 + std::abs(fd)));
    }
}

TEST_CASE("exponent parameters: cross-module identities") {
    const auto p = benchmark_params(SymmetryLimit::pseudospin);
    const auto s = benchmark_spec(SymmetryLimit::pseudospin, PotentialChoice::first);
    const QuantumState q{1, -1};
    const double E = -5.009375979;
    const auto w = exponent_params(E, q, p, s);
    const auto c = effective_coefficients(E, p, s, q);
    CHECK(w.w3 == doctest::Approx((c.cst - c.eff_energy) / (p.alpha * p.alpha)).epsilon(1e-13));
    CHECK(w.w3 > 0.0);
    CHECK(w.w1 - w.w2 + w.w3 + 0.25 > 0.0);

    // free case: only the centrifugal and mass terms survive
    PotentialParams free_p = p;
    free_p.V0 = 0.0;
    free_p.V1 = 0.0;
    const double Ef = -4.9;
    const auto wf = exponent_params(Ef, q, free_p, s);
    CHECK(wf.w3
          == doctest::Approx(2.0 + (25.0 - Ef * Ef) / (p.alpha * p.alpha)).epsilon(1e-12));
}

TEST_CASE("wave spec wires exponents to Jacobi parameters") {
    const auto bs = table_state(1, 1, -1, 0.0);
    const auto ws = wave_spec(bs);
    CHECK(ws.n == 1);
    CHECK(ws.jacobi_a == doctest::Approx(2.0 * ws.exp1).epsilon(1e-15));
    CHECK(ws.jacobi_b == doctest::Approx(2.0 * ws.exp2 - 1.0).epsilon(1e-15));
    CHECK(ws.exp1 > 0.0);
    CHECK(ws.exp2 > 0.5);
    CHECK(ws.jacobi_arg_in_range);

    // the SUSY tail exponent and the wavefunction tail exponent agree:
    // w(a_n) = alpha * sqrt(w3) at a converged energy
    const auto c = effective_coefficients(bs.E, bs.params, bs.spec, bs.state);
    const auto sp = solve_superpotential(c, bs.params, bs.branch);
    const double an = sp.f + bs.degree * shape_parameter_step(bs.params);
    CHECK(superpotential_tail(an, c, bs.params)
          == doctest::Approx(bs.params.alpha * ws.exp1).epsilon(1e-9));
}

TEST_CASE("boundary vanishing and node counts across benchmark states") {
    struct Probe {
        int table, n, kappa;
        double H;
        int expected_nodes;
    };
    const Probe probes[] = {
        {1, 1, -1, 0.0, 1}, {1, 2, -1, 0.0, 2}, {1, 3, -1, 0.5, 3}, {1, 0, 2, 0.0, 1},
        {2, 0, -2, 0.0, 0}, {2, 1, -2, 0.5, 1}, {2, 2, -5, 0.0, 2},
        {3, 1, -1, 0.0, 1}, {4, 2, -2, 0.5, 2},
    };
    const RadialGrid grid;
    for (const auto& probe : probes) {
        CAPTURE(probe.table);
        CAPTURE(probe.n);
        CAPTURE(probe.kappa);
        const auto bs = table_state(probe.table, probe.n, probe.kappa, probe.H);
        const auto sol = solve_components(bs, grid);
        double peak = 0.0;
        const auto& primary =
            bs.spec.limit == SymmetryLimit::pseudospin ? sol.lower : sol.upper;
        for (double v : primary) peak = std::max(peak, std::abs(v));
        REQUIRE(peak > 0.0);
        CHECK(std::abs(primary.front()) <= 1e-6 * peak);
        CHECK(std::abs(primary.back()) <= 1e-6 * peak);
        CHECK(count_nodes(primary) == probe.expected_nodes);
        CHECK(count_nodes(primary) == bs.degree);
    }
}

TEST_CASE("closed form satisfies its own second-order equation") {
    for (int table : {1, 2}) {
        const auto bs = table_state(table, table == 1 ? 1 : 0, table == 1 ? -1 : -2, 0.0);
        const auto c = effective_coefficients(bs.E, bs.params, bs.spec, bs.state);
        const RadialGrid grid;
        const auto r = grid.make();
        const std::size_t skip = r.size() / 50;  // 2% boundary exclusion
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = skip; i + skip < r.size(); ++i) {
            const double u = primary_component(r[i], bs);
            const double upp = primary_component_second_derivative(r[i], bs);
            const double w = effective_potential(r[i], c, bs.params) - c.eff_energy;
            worst = std::max(worst, std::abs(upp - w * u));
            scale = std::max(scale, std::abs(w * u));
        }
        REQUIRE(scale > 0.0);
        CHECK(worst / scale < 1e-6);
    }
}

TEST_CASE("analytic first derivative of the primary component") {
    const auto bs = table_state(1, 1, -1, 0.0);
    for (double r : {20.0, 45.0, 70.0, 100.0}) {
        const double h = 1e-5;
        const double fd =
            (primary_component(r + h, bs) - primary_component(r - h, bs)) / (2.0 * h);
        CHECK(primary_component_derivative(r, bs)
              == doctest::Approx(fd).epsilon(1e-7).scale(1.0 + std::abs(fd)));
    }
}

namespace {

// relative defect of the partner first-order equation with the
// tail-approximated potential; what remains is exactly the centrifugal
// replacement error
double coupling_residual(const BoundState& bs) {
    const auto c = effective_coefficients(bs.E, bs.params, bs.spec, bs.state);
    const double mcoup = bs.spec.M - bs.E + bs.spec.sym_const;
    const double kh = bs.state.kappa + bs.spec.H;
    const double cf = centrifugal_factor(bs.state, bs.spec);

    const RadialGrid grid;
    const auto r = grid.make();
    const std::size_t skip = r.size() / 50;
    double worst = 0.0, scale = 0.0;
    const double h = 1e-5;
    for (std::size_t i = skip; i + skip < r.size(); i += 7) {
        const double ri = r[i];
        const double g = primary_component(ri, bs);
        const double f = partner_component(ri, bs);
        const double fp = (partner_component(ri + h, bs) - partner_component(ri - h, bs))
                          / (2.0 * h);
        // Delta rebuilt from the approximated effective potential
        const double veff = effective_potential(ri, c, bs.params);
        const double capx = centrifugal_approx(ri, bs.params.alpha, bs.params.C, bs.params.D);
        const double delta_tilde = (cf * capx - veff) / mcoup;
        const double lhs = fp + kh * f / ri;
        const double rhs = (bs.spec.M + bs.E - delta_tilde) * g;
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max(scale, std::abs(lhs));
    }
    REQUIRE(scale > 0.0);
    return worst / scale;
}

}  // namespace

TEST_CASE("partner component: coupling residual of the first-order system") {
    const auto bs = table_state(1, 1, -1, 0.5);
    const double defect = coupling_residual(bs);
    CHECK(defect < 5e-3);

    // a finer screening parameter sharpens the exponential replacement, so
    // the defect must drop with alpha
    auto p = bs.params;
    p.alpha = 0.002;
    const auto fine = solve_energy(bs.state, p, bs.spec);
    CHECK(coupling_residual(fine) < 0.5 * defect);
}

TEST_CASE("partner component reacts to the tensor strength") {
    const auto bs = table_state(1, 1, -1, 0.0);
    BoundState shifted = bs;
    shifted.spec.H = 0.5;  // same shape parameters, different coupling operator
    bool differs = false;
    for (double r : {30.0, 60.0, 90.0})
        differs = differs || partner_component(r, bs) != partner_component(r, shifted);
    CHECK(differs);
}

TEST_CASE("partner component at the forbidden energy") {
    auto bs = table_state(1, 1, -1, 0.0);
    bs.E = bs.spec.M + bs.spec.sym_const;  // vanishing coupling denominator
    CHECK_THROWS_AS(partner_component(10.0, bs), std::domain_error);
    CHECK_THROWS_AS(partner_component(-1.0, table_state(1, 1, -1, 0.0)), std::domain_error);
}

TEST_CASE("normalization: convergence, scale, and re-integration") {
    const auto bs = table_state(1, 1, -1, 0.0);
    RadialGrid grid;
    const double n1 = normalize(bs, grid);
    RadialGrid dense = grid;
    dense.points = 2 * grid.points - 1;
    const double n2 = normalize(bs, dense);
    CHECK(n1 > 0.0);
    CHECK(std::isfinite(n1));
    CHECK(std::abs(n2 - n1) / n1 < 1e-8);

    // components normalized on the coarse grid integrate to one on the fine one
    const auto rd = dense.make();
    const double h = dense.step();
    double integral = 0.0;
    std::vector<double> density(rd.size());
    for (std::size_t i = 0; i < rd.size(); ++i) {
        const double u = n1 * primary_component(rd[i], bs);
        const double v = n1 * partner_component(rd[i], bs);
        density[i] = u * u + v * v;
    }
    for (std::size_t i = 0; i + 2 < density.size(); i += 2)
        integral += (h / 3.0) * (density[i] + 4.0 * density[i + 1] + density[i + 2]);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("wrong-limit component accessors are rejected") {
    const auto ps = table_state(1, 1, -1, 0.0);
    const auto sp = table_state(2, 0, -2, 0.0);
    CHECK_NOTHROW(lower_component_ps(10.0, ps));
    CHECK_THROWS_AS(lower_component_ps(10.0, sp), std::invalid_argument);
    CHECK_NOTHROW(upper_component_s(10.0, sp));
    CHECK_THROWS_AS(upper_component_s(10.0, ps), std::invalid_argument);
}
