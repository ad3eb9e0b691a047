#pragma once

#include <stdexcept>
#include <string>
#include <vector>

/// Core domain types and raw radial potentials of the Mobius-square +
/// (quasi-)Yukawa Dirac problem. All quantities are in natural units
/// (hbar = c = 1): energies and inverse lengths in fm^-1, lengths in fm.
namespace msy {

enum class SymmetryLimit { pseudospin, spin };

/// Tail family of the potential: plain Yukawa -V1 e^{-ar}/r (first) or
/// quasi-Yukawa -V1 (1 - e^{-ar}/r)^k (second).
enum class PotentialChoice { first, second };

/// Exponent k of the quasi-Yukawa tail. The squared form is the one that
/// reproduces the published benchmark energies; the linear form is kept
/// selectable because both appear in the literature.
enum class TailForm { squared, linear };

enum class Branch { plus, minus };

/// Shape constants of the Mobius-square potential
/// V0 ((A + B e^{-ar}) / (C + D e^{-ar}))^2 and the tail strength V1.
struct PotentialParams {
    double V0 = -0.2;     ///< Mobius-square strength (fm^-1)
    double V1 = 0.1;      ///< Yukawa / quasi-Yukawa strength
    double A = 1.0;
    double B = -2.0;
    double C = 1.0;
    double D = -1.0;
    double alpha = 0.01;  ///< screening parameter (fm^-1)

    /// Throws std::invalid_argument if alpha <= 0, C or D vanish, or the
    /// Mobius denominator C + D e^{-ar} has a zero at finite r > 0.
    void validate() const;

    /// (A + B e^{-ar}) / (C + D e^{-ar})
    double mobius_factor(double r) const;

    bool operator==(const PotentialParams&) const = default;
};

/// Which symmetry limit is exact, which tail family is used, and the
/// remaining scalar couplings of the reduced radial problem.
struct SymmetrySpec {
    SymmetryLimit limit = SymmetryLimit::pseudospin;
    PotentialChoice choice = PotentialChoice::first;
    TailForm tail = TailForm::squared;
    double sym_const = 0.0;  ///< C_ps or C_s (fm^-1)
    double H = 0.0;          ///< Coulomb-like tensor strength
    double M = 5.0;          ///< fermion mass (fm^-1)

    void validate() const;

    bool operator==(const SymmetrySpec&) const = default;
};

/// Radial quantum number n and spin-orbit quantum number kappa, with the
/// derived orbital / pseudo-orbital / total angular momentum numbers.
struct QuantumState {
    int n = 0;
    int kappa = -1;

    int l() const { return kappa > 0 ? kappa : -kappa - 1; }
    int l_tilde() const { return kappa > 0 ? kappa - 1 : -kappa; }
    double j() const { return (kappa > 0 ? kappa : -kappa) - 0.5; }

    /// Spectroscopic label, e.g. "1S1/2" or "0d3/2" (S and P capitalised,
    /// higher letters lower-case, matching the usual nuclear convention).
    std::string label() const;

    /// Inverse of label(); throws std::invalid_argument on malformed input.
    static QuantumState parse_label(const std::string& text);

    void validate() const;

    bool operator==(const QuantumState&) const = default;
};

struct RadialGrid {
    enum class Spacing { uniform, log };

    double r_min = 1e-3;
    double r_max = 150.0;
    int points = 12001;
    Spacing spacing = Spacing::uniform;

    void validate() const;
    double step() const;  ///< uniform spacing; throws for log grids
    std::vector<double> make() const;

    bool operator==(const RadialGrid&) const = default;
};

/// Delta(r) = V(r) - S(r): Mobius-square plus tail, the binding combination
/// of the pseudospin limit.
double delta_potential(double r, const PotentialParams& p, PotentialChoice choice,
                       TailForm tail = TailForm::squared);

/// Sigma(r) = V(r) + S(r): same family, the binding combination of the spin
/// limit.
double sigma_potential(double r, const PotentialParams& p, PotentialChoice choice,
                       TailForm tail = TailForm::squared);

/// Coulomb-like tensor potential U(r) = -H/r.
double tensor_potential(double r, double H);

/// Exponential replacement for 1/r^2: C^2 a^2 / (C + D e^{-ar})^2.
/// Exact in the a*r -> 0 limit.
double centrifugal_approx(double r, double alpha, double C, double D);

/// Positive square root of centrifugal_approx: C a / (C + D e^{-ar}),
/// the matching replacement for 1/r.
double inverse_r_approx(double r, double alpha, double C, double D);

}  // namespace msy
