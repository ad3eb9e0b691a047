#pragma once

#include <span>
#include <utility>
#include <vector>

#include "msy/coeffs.hpp"

namespace msy {

/// Thrown when the superpotential quadratic has no real root at the given
/// trial energy (an unphysical parameter region).
struct no_real_superpotential : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the superpotential phi(r) = f e^{-ar}/(1 + (D/C)e^{-ar}) + g.
struct SuperpotentialParams {
    double f = 0.0;  ///< coefficient of the Mobius factor (fm^-1)
    double g = 0.0;  ///< constant term (fm^-1)
    Branch branch = Branch::minus;
};

/// Solves the Riccati matching conditions phi^2 - phi' = V_eff - Eeff0 for
/// (f, g). f satisfies f^2 C^2 - f a C D - (quad C^2 + cst D^2 - lin C D) = 0;
/// the branch picks the root. g follows by matching the e^{-2ar} coefficient.
/// Throws no_real_superpotential when the discriminant is negative.
SuperpotentialParams solve_superpotential(const EffectiveCoefficients& c,
                                          const PotentialParams& p, Branch branch);

double superpotential(double r, const SuperpotentialParams& sp, const PotentialParams& p);

/// d phi / dr, analytic.
double superpotential_derivative(double r, const SuperpotentialParams& sp,
                                 const PotentialParams& p);

/// sup-norm over the grid of |phi^2 - phi' - V_eff + Eeff0| with
/// Eeff0 = cst - g^2.
double riccati_residual(const SuperpotentialParams& sp, const EffectiveCoefficients& c,
                        const PotentialParams& p, std::span<const double> grid);

/// V_eff+- = phi^2 +- phi' sampled on the grid (first = plus, second = minus).
std::pair<std::vector<double>, std::vector<double>> partner_potentials(
    const SuperpotentialParams& sp, const PotentialParams& p, std::span<const double> grid);

/// The shape-invariance parameter step a_{k+1} = a_k + alpha D / C.
double shape_parameter_step(const PotentialParams& p);

/// w(a) = (-a^2 C^2 - cst D^2 + quad C^2) / (2 C D a): the constant part of
/// the superpotential after k shape-invariance steps, as a function of the
/// stepped Mobius coefficient a.
double superpotential_tail(double a, const EffectiveCoefficients& c, const PotentialParams& p);

/// Remainders R(a_1) .. R(a_n_max) of the shape-invariance chain,
/// R(a_k) = w(a_{k-1})^2 - w(a_k)^2. Throws std::domain_error when some a_k
/// vanishes (degenerate parameters).
std::vector<double> shape_invariance_remainders(double a0, const EffectiveCoefficients& c,
                                                const PotentialParams& p, int n_max);

/// Closed-form effective eigenvalue of the n-th state:
/// Eeff_n = cst - w(a_n)^2 with a_n = a_0(branch) + n alpha D / C.
double closed_form_effective_energy(int n, const EffectiveCoefficients& c,
                                    const PotentialParams& p, Branch branch);

}  // namespace msy
