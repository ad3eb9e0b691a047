#pragma once

#include "msy/model.hpp"

namespace msy {

/// Numerator coefficients of the reduced effective potential
///
///   V_eff(r) = (quad e^{-2ar} + lin e^{-ar} + cst) / (1 + (D/C) e^{-ar})^2
///
/// together with the effective energy of the Schroedinger-like radial
/// equation -u'' + V_eff u = Eeff u. All four fields are affine/quadratic
/// polynomials of the trial energy E at which they were assembled.
struct EffectiveCoefficients {
    double quad = 0.0;        ///< coefficient of e^{-2ar} (fm^-2)
    double lin = 0.0;         ///< coefficient of e^{-ar} (fm^-2)
    double cst = 0.0;         ///< constant numerator term (fm^-2)
    double eff_energy = 0.0;  ///< Eeff (fm^-2)
    double trial_E = 0.0;     ///< the E these were evaluated at (fm^-1)
};

/// (kappa+H)(kappa+H-1) in the pseudospin limit, (kappa+H)(kappa+H+1) in the
/// spin limit: the only way kappa and H enter the radial problem.
double centrifugal_factor(const QuantumState& q, const SymmetrySpec& s);

/// Couples the physical potential into V_eff: -(M - E + C_ps) in the
/// pseudospin limit, +(M + E - C_s) in the spin limit.
double potential_coupling(double E, const SymmetrySpec& s);

/// Assembles the coefficients for any (limit, choice) combination.
EffectiveCoefficients effective_coefficients(double E, const PotentialParams& p,
                                             const SymmetrySpec& s, const QuantumState& q);

/// Limit/choice-specific entry points. Each checks that the spec matches its
/// combination and then defers to effective_coefficients.
EffectiveCoefficients coeffs_pseudospin_first(double E, const PotentialParams& p,
                                              const SymmetrySpec& s, const QuantumState& q);
EffectiveCoefficients coeffs_spin_first(double E, const PotentialParams& p,
                                        const SymmetrySpec& s, const QuantumState& q);
EffectiveCoefficients coeffs_pseudospin_second(double E, const PotentialParams& p,
                                               const SymmetrySpec& s, const QuantumState& q);
EffectiveCoefficients coeffs_spin_second(double E, const PotentialParams& p,
                                         const SymmetrySpec& s, const QuantumState& q);

/// V_eff(r) from assembled coefficients.
double effective_potential(double r, const EffectiveCoefficients& c, const PotentialParams& p);

}  // namespace msy
