#pragma once

#include "cauchy3d/core.hpp"

namespace cauchy3d {

/// Outcome of the sufficient solvability test: the apex coefficient must
/// strictly dominate the summed magnitudes of all other top-layer coefficients.
struct SolvabilityReport {
    double apex_magnitude = 0.0;
    double competitor_sum = 0.0;
    double margin = 0.0; // apex_magnitude - competitor_sum
    bool satisfied = false;
};

/// Evaluates |c(apex.x, apex.y, m)| > sum over the rest of the top layer of |c|.
/// The verdict depends on the top stencil layer only.
SolvabilityReport check_solvability(const Stencil& stencil, const Apex& apex);

} // namespace cauchy3d
