#include "msy/susy.hpp"

#include <cmath>

namespace msy {

SuperpotentialParams solve_superpotential(const EffectiveCoefficients& c,
                                          const PotentialParams& p, Branch branch) {
    const double a = p.alpha, C = p.C, D = p.D;
    const double disc = a * a * D * D + 4.0 * c.cst * D * D + 4.0 * c.quad * C * C
                        - 4.0 * c.lin * C * D;
    if (disc < 0.0)
        throw no_real_superpotential("solve_superpotential: negative discriminant at E = "
                                     + std::to_string(c.trial_E));
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    SuperpotentialParams sp;
    sp.branch = branch;
    sp.f = a * D / (2.0 * C) + sign * std::sqrt(disc) / (2.0 * C);
    if (sp.f == 0.0)
        throw std::domain_error("solve_superpotential: degenerate root f = 0");
    sp.g = (-sp.f * sp.f * C * C - c.cst * D * D + c.quad * C * C) / (2.0 * C * D * sp.f);
    return sp;
}

namespace {

// 1 + (D/C) e^{-ar}, evaluated without cancellation when D/C -> -1
double mobius_denominator(double r, const PotentialParams& p) {
    const double rho = p.D / p.C;
    return (1.0 + rho) + rho * std::expm1(-p.alpha * r);
}

}  // namespace

double superpotential(double r, const SuperpotentialParams& sp, const PotentialParams& p) {
    const double t = std::exp(-p.alpha * r);
    return sp.f * t / mobius_denominator(r, p) + sp.g;
}

double superpotential_derivative(double r, const SuperpotentialParams& sp,
                                 const PotentialParams& p) {
    const double t = std::exp(-p.alpha * r);
    const double s = mobius_denominator(r, p);
    return -p.alpha * sp.f * t / (s * s);
}

double riccati_residual(const SuperpotentialParams& sp, const EffectiveCoefficients& c,
                        const PotentialParams& p, std::span<const double> grid) {
    const double e0 = c.cst - sp.g * sp.g;
    double worst = 0.0;
    for (double r : grid) {
        const double phi = superpotential(r, sp, p);
        const double dphi = superpotential_derivative(r, sp, p);
        const double veff = effective_potential(r, c, p);
        worst = std::max(worst, std::abs(phi * phi - dphi - veff + e0));
    }
    return worst;
}

std::pair<std::vector<double>, std::vector<double>> partner_potentials(
    const SuperpotentialParams& sp, const PotentialParams& p, std::span<const double> grid) {
    std::vector<double> vplus(grid.size()), vminus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double phi = superpotential(grid[i], sp, p);
        const double dphi = superpotential_derivative(grid[i], sp, p);
        vplus[i] = phi * phi + dphi;
        vminus[i] = phi * phi - dphi;
    }
    return {std::move(vplus), std::move(vminus)};
}

double shape_parameter_step(const PotentialParams& p) { return p.alpha * p.D / p.C; }

double superpotential_tail(double a, const EffectiveCoefficients& c, const PotentialParams& p) {
    if (a == 0.0) throw std::domain_error("superpotential_tail: parameter a vanishes");
    const double C = p.C, D = p.D;
    return (-a * a * C * C - c.cst * D * D + c.quad * C * C) / (2.0 * C * D * a);
}

std::vector<double> shape_invariance_remainders(double a0, const EffectiveCoefficients& c,
                                                const PotentialParams& p, int n_max) {
    if (n_max < 0) throw std::invalid_argument("shape_invariance_remainders: n_max < 0");
    std::vector<double> remainders;
    remainders.reserve(n_max);
    const double step = shape_parameter_step(p);
    double prev = superpotential_tail(a0, c, p);
    for (int k = 1; k <= n_max; ++k) {
        const double ak = a0 + k * step;
        const double wk = superpotential_tail(ak, c, p);
        remainders.push_back(prev * prev - wk * wk);
        prev = wk;
    }
    return remainders;
}

double closed_form_effective_energy(int n, const EffectiveCoefficients& c,
                                    const PotentialParams& p, Branch branch) {
    if (n < 0) throw std::invalid_argument("closed_form_effective_energy: n < 0");
    const SuperpotentialParams sp = solve_superpotential(c, p, branch);
    const double an = sp.f + n * shape_parameter_step(p);
    const double wn = superpotential_tail(an, c, p);
    return c.cst - wn * wn;
}

}  // namespace msy
