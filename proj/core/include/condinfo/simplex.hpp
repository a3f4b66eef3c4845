#pragma once

#include "condinfo/rational.hpp"

#include <vector>

namespace condinfo {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> solution;  // x >= 0 with A x = b, when feasible
    std::vector<Rational> farkas;    // y with y^T A >= 0 and y^T b < 0, when infeasible
    std::size_t pivots = 0;
};

/// Decides A x = b, x >= 0 by a phase-one simplex over exact rationals.
///
/// Rows are sign-normalized so b >= 0 and an artificial identity basis is
/// appended. Entering and leaving variables follow Bland's rule, so the method
/// terminates. On a positive phase-one optimum the dual values of the final
/// basis (read off the artificial columns) give the Farkas vector.
FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace condinfo
