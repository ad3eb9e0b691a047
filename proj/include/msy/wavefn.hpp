#pragma once

#include "msy/spectrum.hpp"

namespace msy {

/// Dimensionless combinations of the effective coefficients that fix the
/// closed-form wavefunction exponents:
///   w1 = (quad (C/D)^2 - Eeff)/a^2,  w2 = (lin (C/D) - 2 Eeff)/a^2,
///   w3 = (cst - Eeff)/a^2.
struct Omegas {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
};

Omegas exponent_params(double E, const QuantumState& q, const PotentialParams& p,
                       const SymmetrySpec& s);

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
/// Requires n >= 0 and a, b > -1.
double jacobi(int n, double a, double b, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}(x).
double jacobi_derivative(int n, double a, double b, double x);

/// Exponents, Jacobi parameters and normalization of a closed-form radial
/// component
///   u(r) = N z^{exp1} (1-z)^{exp2} P_n^{(a,b)}(1 - 2z),  z = -(D/C) e^{-ar}.
struct WaveSpec {
    double exp1 = 0.0;      ///< sqrt(w3); tail decay exponent
    double exp2 = 0.0;      ///< 1/2 + sqrt(w1 - w2 + w3 + 1/4); origin exponent
    double jacobi_a = 0.0;  ///< 2 exp1
    double jacobi_b = 0.0;  ///< 2 exp2 - 1
    int n = 0;              ///< polynomial degree
    double log_scale = 0.0; ///< log of the raw envelope peak; the evaluators
                            ///< divide it out so amplitudes stay O(1)
    double norm = 0.0;      ///< scale for the O(1) form; 0 until normalize()
    bool jacobi_arg_in_range = true;  ///< argument stays within [-1, 1]
};

/// Derives the wavefunction exponents of a converged state. Throws
/// std::domain_error when the exponents are not those of a normalizable
/// state (w3 <= 0 or complex Mobius exponent) or when the power base
/// -(D/C) e^{-ar} is negative.
WaveSpec wave_spec(const BoundState& bs);

/// Lower radial component G(r) of a pseudospin-limit state, in the O(1)
/// scaling of wave_spec (multiply by the normalize() factor for the
/// physically normalized amplitude).
double lower_component_ps(double r, const BoundState& bs);

/// Upper radial component F(r) of a spin-limit state, same scaling.
double upper_component_s(double r, const BoundState& bs);

/// The dominant component for the state's own limit (G for pseudospin,
/// F for spin).
double primary_component(double r, const BoundState& bs);

/// d/dr of the primary component, analytic (no finite differences).
double primary_component_derivative(double r, const BoundState& bs);

/// d^2/dr^2 of the primary component, analytic.
double primary_component_second_derivative(double r, const BoundState& bs);

/// The other spinor component, generated by the first-order coupling
/// operator: F = (G' - (kappa+H) G / r) / (M - E + C_ps) in the pseudospin
/// limit, G = (F' + (kappa+H) F / r) / (M + E - C_s) in the spin limit.
/// Throws std::domain_error at the forbidden energy (vanishing denominator).
double partner_component(double r, const BoundState& bs);

/// Normalization factor N such that the amplitudes N*primary, N*partner
/// satisfy int (F^2 + G^2) dr = 1 (composite Simpson on the grid). Throws
/// std::domain_error for non-integrable tails.
double normalize(const BoundState& bs, const RadialGrid& grid);

/// Fully evaluated, normalized spinor components on a grid.
struct RadialSolution {
    WaveSpec spec;
    std::vector<double> r;
    std::vector<double> upper;  ///< F
    std::vector<double> lower;  ///< G
};

RadialSolution solve_components(const BoundState& bs, const RadialGrid& grid);

/// Counts interior sign changes of sampled amplitudes, ignoring the
/// below-threshold tails where the closed form underflows.
int count_nodes(std::span<const double> values, double rel_threshold = 1e-9);

}  // namespace msy
