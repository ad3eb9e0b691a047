#pragma once

#include <span>
#include <vector>

#include "msy/model.hpp"

namespace msy {

/// One published benchmark energy level: table number (1..4), the symmetry
/// limit / potential choice it belongs to, quantum numbers, tensor strength
/// and the 10-digit reference energy.
struct ReferenceLevel {
    int table;
    SymmetryLimit limit;
    PotentialChoice choice;
    int n;
    int kappa;
    double H;
    double energy;  ///< fm^-1
};

/// All 192 benchmark levels (4 tables x 12 rows x {H=0, 0.5} x both kappa
/// signs).
std::span<const ReferenceLevel> reference_levels();

/// Levels of a single benchmark table (1..4).
std::vector<ReferenceLevel> reference_levels(int table);

/// The shared shape constants of the benchmark tables
/// (A=1, B=-2, C=1, D=-1, alpha=0.01, V1=0.1; V0 = -0.2 or +0.2 by limit).
PotentialParams benchmark_params(SymmetryLimit limit);

/// The benchmark symmetry spec for a table: M = 5 fm^-1, sym_const = 0,
/// squared quasi-Yukawa tail; H filled per level.
SymmetrySpec benchmark_spec(SymmetryLimit limit, PotentialChoice choice, double H = 0.0);

/// Table number for a (limit, choice) combination: 1 = (pseudospin, first),
/// 2 = (spin, first), 3 = (pseudospin, second), 4 = (spin, second).
int benchmark_table(SymmetryLimit limit, PotentialChoice choice);

}  // namespace msy
