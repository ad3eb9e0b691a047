#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "msy/model.hpp"
#include "msy/reference_levels.hpp"

using namespace msy;

namespace {

PotentialParams table1_params() {
    PotentialParams p;
    p.V0 = -0.2;
    p.V1 = 0.1;
    p.A = 1.0;
    p.B = -2.0;
    p.C = 1.0;
    p.D = -1.0;
    p.alpha = 0.01;
    return p;
}

}  // namespace

TEST_CASE("delta potential: limits and direct arithmetic") {
    PotentialParams p = table1_params();

    // far tail: only the Mobius plateau V0 (A/C)^2 survives
    const double far = delta_potential(5e4, p, PotentialChoice::first);
    CHECK(far == doctest::Approx(p.V0 * (p.A / p.C) * (p.A / p.C)).epsilon(1e-12));

    PotentialParams zero = p;
    zero.V0 = 0.0;
    zero.V1 = 0.0;
    for (double r : {0.01, 0.5, 1.0, 10.0, 200.0})
        CHECK(delta_potential(r, zero, PotentialChoice::first) == 0.0);

    // scalar evaluation against the formula spelled out by hand
    const double r = 1.0;
    const double t = std::exp(-p.alpha * r);
    const double mob = (p.A + p.B * t) / (p.C + p.D * t);
    const double expected = p.V0 * mob * mob - p.V1 * t / r;
    CHECK(delta_potential(r, p, PotentialChoice::first)
          == doctest::Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(delta_potential(0.0, p, PotentialChoice::first), std::domain_error);
    CHECK_THROWS_AS(delta_potential(-1.0, p, PotentialChoice::first), std::domain_error);
}

TEST_CASE("sigma potential mirrors delta with the spin-table parameters") {
    PotentialParams p = table1_params();
    p.V0 = 0.2;

    PotentialParams zero = p;
    zero.V0 = 0.0;
    zero.V1 = 0.0;
    CHECK(sigma_potential(3.0, zero, PotentialChoice::first) == 0.0);
    CHECK(sigma_potential(5e4, p, PotentialChoice::first)
          == doctest::Approx(p.V0 * (p.A / p.C) * (p.A / p.C)).epsilon(1e-12));

    const double r = 1.0;
    const double t = std::exp(-p.alpha * r);
    const double mob = (p.A + p.B * t) / (p.C + p.D * t);
    CHECK(sigma_potential(r, p, PotentialChoice::first)
          == doctest::Approx(p.V0 * mob * mob - p.V1 * t / r).epsilon(1e-14));
}

TEST_CASE("quasi-Yukawa tail forms") {
    PotentialParams p = table1_params();
    const double r = 2.5;
    const double t = std::exp(-p.alpha * r);
    const double mob = (p.A + p.B * t) / (p.C + p.D * t);
    const double base = 1.0 - t / r;
    CHECK(delta_potential(r, p, PotentialChoice::second, TailForm::squared)
          == doctest::Approx(p.V0 * mob * mob - p.V1 * base * base).epsilon(1e-14));
    CHECK(delta_potential(r, p, PotentialChoice::second, TailForm::linear)
          == doctest::Approx(p.V0 * mob * mob - p.V1 * base).epsilon(1e-14));
    CHECK(delta_potential(r, p, PotentialChoice::second, TailForm::squared)
          != delta_potential(r, p, PotentialChoice::second, TailForm::linear));
}

TEST_CASE("both potentials stay finite across the physical half-line") {
    PotentialParams p = table1_params();
    for (double r = 1e-3; r < 200.0; r *= 1.7) {
        CHECK(std::isfinite(delta_potential(r, p, PotentialChoice::first)));
        CHECK(std::isfinite(delta_potential(r, p, PotentialChoice::second)));
        CHECK(std::isfinite(sigma_potential(r, p, PotentialChoice::first)));
        CHECK(std::isfinite(sigma_potential(r, p, PotentialChoice::second)));
    }
}

TEST_CASE("tensor potential") {
    CHECK(tensor_potential(1.0, 0.0) == 0.0);
    CHECK(tensor_potential(7.3, 0.0) == 0.0);
    CHECK(tensor_potential(1.0, 0.5) == doctest::Approx(-0.5));
    CHECK(tensor_potential(2.0, 0.5) == doctest::Approx(-0.25));
    CHECK_THROWS_AS(tensor_potential(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(tensor_potential(-2.0, 0.5), std::domain_error);
}

TEST_CASE("centrifugal approximation against 1/r^2") {
    // alpha -> 0 recovers the exact centrifugal term
    CHECK(centrifugal_approx(1.0, 1e-7, 1.0, -1.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(centrifugal_approx(3.0, 1e-7, 1.0, -1.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-6));

    const double a = 0.01;
    const double expected = a * a / std::pow(-std::expm1(-a), 2);
    CHECK(centrifugal_approx(1.0, a, 1.0, -1.0) == doctest::Approx(expected).epsilon(1e-14));
    // about +1% high at alpha r = 0.01
    CHECK(centrifugal_approx(1.0, a, 1.0, -1.0) == doctest::Approx(1.0100).epsilon(1e-4));

    CHECK_THROWS_AS(centrifugal_approx(0.0, a, 1.0, -1.0), std::domain_error);
}

TEST_CASE("relative error of the centrifugal approximation grows with alpha r") {
    // error(x) = (x / (1 - e^{-x}))^2 - 1, a function of x = alpha r only
    double prev = 0.0;
    for (double x = 1e-3; x <= 1.0; x += 1e-3) {
        const double r = x / 0.01;
        const double err = centrifugal_approx(r, 0.01, 1.0, -1.0) * r * r - 1.0;
        CHECK(err > prev);
        prev = err;
        if (x <= 0.0198) CHECK(err < 0.02);  // the 2% band ends near alpha r = 0.02
    }
    // at alpha r = 0.2 the approximation is ~21.7% high
    const double err02 = centrifugal_approx(20.0, 0.01, 1.0, -1.0) * 400.0 - 1.0;
    CHECK(err02 == doctest::Approx(0.2173).epsilon(1e-3));
}

TEST_CASE("inverse_r_approx squares to centrifugal_approx") {
    const double a = 0.01;
    CHECK(inverse_r_approx(1.0, 1e-7, 1.0, -1.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(inverse_r_approx(1.0, a, 1.0, -1.0)
          == doctest::Approx(a / -std::expm1(-a)).epsilon(1e-14));
    for (double r = 0.01; r < 120.0; r *= 1.9) {
        const double q = inverse_r_approx(r, a, 1.0, -1.0);
        CHECK(q * q == doctest::Approx(centrifugal_approx(r, a, 1.0, -1.0)).epsilon(1e-15));
    }
}

TEST_CASE("potential parameter validation") {
    PotentialParams p = table1_params();
    CHECK_NOTHROW(p.validate());  // D = -C pole sits at r = 0, allowed

    PotentialParams bad = p;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.C = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.D = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.D = -2.0;  // pole at e^{-ar} = 1/2, i.e. finite r > 0
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.D = 1.0;  // denominator never vanishes
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("quantum state derived numbers and labels") {
    QuantumState q{1, -1};
    CHECK(q.l() == 0);
    CHECK(q.l_tilde() == 1);
    CHECK(q.j() == doctest::Approx(0.5));
    CHECK(q.label() == "1S1/2");

    CHECK(QuantumState{0, 2}.label() == "0d3/2");
    CHECK(QuantumState{0, -2}.label() == "0P3/2");
    CHECK(QuantumState{0, 1}.label() == "0P1/2");
    CHECK(QuantumState{2, 5}.label() == "2h9/2");
    CHECK(QuantumState{0, -5}.label() == "0g9/2");
    CHECK(QuantumState{3, -4}.label() == "3f7/2");

    // kappa(kappa-1) = lt(lt+1) and kappa(kappa+1) = l(l+1)
    for (int kappa : {-4, -3, -2, -1, 1, 2, 3, 4, 5}) {
        QuantumState s{0, kappa};
        CHECK(kappa * (kappa - 1) == s.l_tilde() * (s.l_tilde() + 1));
        CHECK(kappa * (kappa + 1) == s.l() * (s.l() + 1));
    }

    CHECK_THROWS_AS((QuantumState{1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((QuantumState{-1, 1}).validate(), std::invalid_argument);
}

TEST_CASE("label round-trip over every benchmark level") {
    for (const auto& lvl : reference_levels()) {
        const QuantumState q{lvl.n, lvl.kappa};
        const std::string text = q.label();
        const QuantumState back = QuantumState::parse_label(text);
        CHECK(back == q);
        CHECK(back.label() == text);
    }
    CHECK_THROWS_AS(QuantumState::parse_label("abc"), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::parse_label("1S2/2"), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::parse_label("1S1/3"), std::invalid_argument);
    CHECK_THROWS_AS(QuantumState::parse_label("1Z1/2"), std::invalid_argument);
}

TEST_CASE("radial grids") {
    RadialGrid g;
    g.r_min = 1.0;
    g.r_max = 2.0;
    g.points = 5;
    const auto r = g.make();
    REQUIRE(r.size() == 5);
    CHECK(r.front() == doctest::Approx(1.0));
    CHECK(r.back() == doctest::Approx(2.0));
    CHECK(g.step() == doctest::Approx(0.25));

    g.spacing = RadialGrid::Spacing::log;
    const auto rl = g.make();
    CHECK(rl[1] / rl[0] == doctest::Approx(rl[2] / rl[1]).epsilon(1e-12));
    CHECK_THROWS_AS(g.step(), std::invalid_argument);

    RadialGrid bad;
    bad.r_min = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = RadialGrid{};
    bad.points = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = RadialGrid{};
    bad.r_min = 5.0;
    bad.r_max = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
