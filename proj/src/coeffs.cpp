#include "msy/coeffs.hpp"

#include <cmath>

namespace msy {

double centrifugal_factor(const QuantumState& q, const SymmetrySpec& s) {
    const double k = q.kappa + s.H;
    return s.limit == SymmetryLimit::pseudospin ? k * (k - 1.0) : k * (k + 1.0);
}

double potential_coupling(double E, const SymmetrySpec& s) {
    return s.limit == SymmetryLimit::pseudospin ? -(s.M - E + s.sym_const)
                                                : +(s.M + E - s.sym_const);
}

EffectiveCoefficients effective_coefficients(double E, const PotentialParams& p,
                                             const SymmetrySpec& s, const QuantumState& q) {
    const double a = p.alpha;
    const double rho = p.D / p.C;
    const double cpot = potential_coupling(E, s);

    EffectiveCoefficients c;
    c.trial_E = E;

    // Mobius-square numerator V0 (A + B t)^2 / C^2
    c.quad = cpot * p.V0 * p.B * p.B / (p.C * p.C);
    c.lin = cpot * 2.0 * p.A * p.B * p.V0 / (p.C * p.C);
    c.cst = centrifugal_factor(q, s) * a * a + cpot * p.V0 * p.A * p.A / (p.C * p.C);

    // Base effective energy: Eeff = E^2 - M^2 -+ sym_const (M +- E)
    if (s.limit == SymmetryLimit::pseudospin)
        c.eff_energy = E * E - s.M * s.M - s.sym_const * (s.M + E);
    else
        c.eff_energy = E * E - s.M * s.M + s.sym_const * (s.M - E);

    // Tail terms, with e^{-ar}/r -> a t/(1+rho t) and e^{-2ar}/r^2 -> a^2 t^2/(1+rho t)^2.
    if (s.choice == PotentialChoice::first) {
        // -V1 e^{-ar}/r
        c.quad += cpot * (-p.V1) * a * rho;
        c.lin += cpot * (-p.V1) * a;
    } else if (s.tail == TailForm::squared) {
        // -V1 (1 - e^{-ar}/r)^2 = -V1 + 2 V1 e^{-ar}/r - V1 e^{-2ar}/r^2
        c.quad += cpot * (2.0 * p.V1 * a * rho - p.V1 * a * a);
        c.lin += cpot * 2.0 * p.V1 * a;
        c.eff_energy += cpot * p.V1;  // the constant -V1 moves to the energy side
    } else {
        // -V1 (1 - e^{-ar}/r) = -V1 + V1 e^{-ar}/r
        c.quad += cpot * p.V1 * a * rho;
        c.lin += cpot * p.V1 * a;
        c.eff_energy += cpot * p.V1;
    }
    return c;
}

namespace {

EffectiveCoefficients checked(double E, const PotentialParams& p, const SymmetrySpec& s,
                              const QuantumState& q, SymmetryLimit limit, PotentialChoice choice,
                              const char* who) {
    if (s.limit != limit || s.choice != choice)
        throw std::invalid_argument(std::string(who) + ": SymmetrySpec limit/choice mismatch");
    return effective_coefficients(E, p, s, q);
}

}  // namespace

EffectiveCoefficients coeffs_pseudospin_first(double E, const PotentialParams& p,
                                              const SymmetrySpec& s, const QuantumState& q) {
    return checked(E, p, s, q, SymmetryLimit::pseudospin, PotentialChoice::first,
                   "coeffs_pseudospin_first");
}

EffectiveCoefficients coeffs_spin_first(double E, const PotentialParams& p, const SymmetrySpec& s,
                                        const QuantumState& q) {
    return checked(E, p, s, q, SymmetryLimit::spin, PotentialChoice::first, "coeffs_spin_first");
}

EffectiveCoefficients coeffs_pseudospin_second(double E, const PotentialParams& p,
                                               const SymmetrySpec& s, const QuantumState& q) {
    return checked(E, p, s, q, SymmetryLimit::pseudospin, PotentialChoice::second,
                   "coeffs_pseudospin_second");
}

EffectiveCoefficients coeffs_spin_second(double E, const PotentialParams& p, const SymmetrySpec& s,
                                         const QuantumState& q) {
    return checked(E, p, s, q, SymmetryLimit::spin, PotentialChoice::second, "coeffs_spin_second");
}

double effective_potential(double r, const EffectiveCoefficients& c, const PotentialParams& p) {
    const double t = std::exp(-p.alpha * r);
    const double rho = p.D / p.C;
    const double s = (1.0 + rho) + rho * std::expm1(-p.alpha * r);
    if (s == 0.0) throw std::domain_error("effective_potential: pole of the Mobius denominator");
    return (c.quad * t * t + c.lin * t + c.cst) / (s * s);
}

}  // namespace msy
