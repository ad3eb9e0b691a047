#pragma once

#include <span>
#include <vector>

#include "msy/susy.hpp"

namespace msy {

struct no_bound_state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// More than one root survives the physical filters; candidates carried for
/// diagnostics.
struct ambiguous_roots_error : std::runtime_error {
    std::vector<double> candidates;
    ambiguous_roots_error(const std::string& what, std::vector<double> cand)
        : std::runtime_error(what), candidates(std::move(cand)) {}
};

/// A converged eigenstate of the transcendental energy equation.
struct BoundState {
    double E = 0.0;        ///< fm^-1
    QuantumState state;
    SymmetrySpec spec;
    PotentialParams params;
    Branch branch = Branch::minus;
    double residual_at_E = 0.0;  ///< fm^-2
    int degree = 0;              ///< polynomial degree of the primary component
};

/// Degree of the Jacobi polynomial solving the reduced equation. The label n
/// counts the nodes of the dominant spinor component; in the pseudospin limit
/// the kappa > 0 doublet member shares the lower component of its kappa < 0
/// partner, which carries one extra node, hence degree = n + 1 there.
int polynomial_degree(const QuantumState& q, const SymmetrySpec& s);

/// Self-consistency defect Eeff(E) - Eeff_closed(n; E). Its zeros are the
/// bound-state energies. Returns NaN where no real superpotential exists so
/// that bracketing scans skip the region.
double eigenvalue_residual(double E, const QuantumState& q, const PotentialParams& p,
                           const SymmetrySpec& s, Branch branch);

struct EnergyWindow {
    double lo = 0.0;
    double hi = 0.0;
};

/// Default search window: (-M-2, -M+2) for pseudospin, (M-2, M+2) for spin.
EnergyWindow default_window(const SymmetrySpec& s);

enum class BranchPolicy { automatic, plus, minus };

struct SolveOptions {
    EnergyWindow window;  ///< lo == hi means "use default_window"
    BranchPolicy branch = BranchPolicy::automatic;
    double scan_step = 1e-3;    ///< fm^-1
    double tolerance = 1e-10;   ///< bisection |dE| target (fm^-1)
};

/// Finds the physical bound-state energy: brackets sign changes of the
/// residual over the window, bisects each bracket, then filters roots by
/// normalizability of the wavefunction exponents. Throws no_bound_state_error
/// or ambiguous_roots_error.
BoundState solve_energy(const QuantumState& q, const PotentialParams& p, const SymmetrySpec& s,
                        const SolveOptions& opts = {});

/// The second member of the (pseudo)spin doublet. Pseudospin pairs
/// (n, -lt) <-> (n-1, lt+1); spin pairs (n, kappa) <-> (n, -kappa-1).
/// Throws no_bound_state_error when the partner would need n < 0.
QuantumState doublet_partner(const QuantumState& q, const SymmetrySpec& s);

/// Shape constants realizing the Deng-Fan potential with dissociation
/// energy De and shape parameter b (the A = 1 gauge); the screening
/// parameter keeps its default and stays the caller's choice.
PotentialParams deng_fan_map(double De, double b);

/// Drops the Mobius-square part (V0 = 0), leaving the pure tail potential.
PotentialParams yukawa_reduction(PotentialParams p);

/// Solves the same state along a sequence of screening parameters; used to
/// study the alpha -> 0 Coulomb-like limit numerically.
std::vector<double> coulomb_trend_check(const PotentialParams& p, const SymmetrySpec& s,
                                        const QuantumState& q,
                                        std::span<const double> alpha_sequence);

}  // namespace msy
