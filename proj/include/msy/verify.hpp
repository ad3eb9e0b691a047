#pragma once

#include <string>
#include <vector>

#include "msy/oracle.hpp"
#include "msy/reference_levels.hpp"

namespace msy::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Every published benchmark level re-solved and compared at tolerance tol
/// (fm^-1); one aggregated result per table.
std::vector<CheckResult> tables(double tol = 1e-6);

/// Doublet degeneracy: paired states coincide to 1e-9 at H = 0 and split by
/// at least 1e-5 at H = 0.5.
std::vector<CheckResult> degeneracy();

/// Riccati identity of the converged ground configuration of each table:
/// sup |phi^2 - phi' - V_eff + Eeff0| <= 1e-8 (1 + sup |V_eff|).
std::vector<CheckResult> riccati();

/// Shape invariance on the first benchmark table: V+(a_k) - V-(a_{k+1}) is
/// constant in r and equals R(a_{k+1}) for k = 0..3.
std::vector<CheckResult> shape_invariance();

/// Closed form vs Numerov shooting on first/last row of each table, both
/// tensor strengths (16 states), at tolerance tol.
std::vector<CheckResult> oracle_agreement(double tol = 1e-4);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace msy::verify
