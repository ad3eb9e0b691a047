#pragma once

#include <functional>

#include "msy/spectrum.hpp"

namespace msy {

struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The converged shooting solution has the wrong number of nodes.
struct wrong_state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShootingConfig {
    RadialGrid grid{1e-3, 150.0, 12001, RadialGrid::Spacing::uniform};
    double match_point = 0.0;   ///< <= 0: match at the minimum of V_eff
    double bracket_lo = 0.0;    ///< lo == hi: derive the bracket from the
    double bracket_hi = 0.0;    ///<           closed-form energy +- 0.05
    int node_target = -1;       ///< < 0: use the state's polynomial degree
    double tol = 1e-8;          ///< bisection |dE| target (fm^-1)
};

enum class Direction { outward, inward };

/// Integrates u'' = W(r) u across the uniform grid with Numerov's three-point
/// scheme. seed0/seed1 are the two boundary-side values (u[0], u[1] going
/// outward; u[N-1], u[N-2] going inward). When the amplitude threatens to
/// overflow the whole array computed so far is rescaled, so the result stays
/// proportional to the true solution throughout (early entries may flush to
/// zero). Throws std::invalid_argument for non-uniform grids.
std::vector<double> numerov_integrate(const std::function<double(double)>& w_of_r,
                                      const RadialGrid& grid, Direction dir, double seed0,
                                      double seed1);

/// Matching diagnostics of a two-sided integration at a trial energy.
struct MatchInfo {
    double wronskian = 0.0;           ///< normalized discrete Wronskian; 0 at an eigenvalue
    double log_derivative_gap = 0.0;  ///< d ln u/dr (outward) - d ln v/dr (inward) at the match
    int nodes = 0;                    ///< interior nodes of the matched solution
};

/// Two-sided Numerov integration of the approximated radial problem at trial
/// energy E.
MatchInfo shooting_match(double E, const QuantumState& q, const PotentialParams& p,
                         const SymmetrySpec& s, const ShootingConfig& cfg);

/// Independent eigenvalue: bisects the discrete-Wronskian sign change of the
/// two-sided Numerov integration, using the same approximated V_eff as the
/// closed form. Throws bracket_error / wrong_state_error.
double shooting_eigenvalue(const QuantumState& q, const PotentialParams& p,
                           const SymmetrySpec& s, const ShootingConfig& cfg = {});

struct ApproximationReport {
    double e_approx = 0.0;            ///< eigenvalue with the approximated V_eff (fm^-1)
    double e_exact_centrifugal = 0.0; ///< eigenvalue with exact 1/r^2 and 1/r terms (fm^-1)
    double gap = 0.0;                 ///< |difference| (fm^-1)
};

/// Solves the shooting problem twice, once with the approximated V_eff and
/// once with V_eff rebuilt from the exact centrifugal and tail terms, and
/// reports the energy shift caused by the exponential approximation.
ApproximationReport approximation_error_report(const QuantumState& q, const PotentialParams& p,
                                               const SymmetrySpec& s,
                                               const ShootingConfig& cfg = {});

}  // namespace msy
