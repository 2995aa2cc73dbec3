#pragma once

#include "cauchy3d/assembly.hpp"
#include "cauchy3d/core.hpp"
#include "cauchy3d/linsolve.hpp"

namespace cauchy3d {

struct SweepResult {
    Field field;
    double value_at_target = 0.0;
    int layers_solved = 0;
    double max_residual = 0.0;
};

struct SolveOptions {
    /// Skip the solvability gate and rely on the LU singularity check.
    bool force = false;
};

/// Fills the unknown cells of one layer by solving the cached layer system.
/// Layers below must be fully known and the layer's frame cells given.
Field solve_layer(const CauchyProblem& problem, Field field, int layer,
                  const LuFactorization& lu);

/// Solves the Cauchy problem and reads the value at `target`.
///
/// A target inside L returns its initial value directly with zero layers
/// solved. Otherwise the solvability condition is required (unless forced),
/// one factorization of the layer matrix is shared by all layers, and the
/// sweep fills every layer of the field.
SweepResult solve_at_point(const CauchyProblem& problem, const Triple& target,
                           const SolveOptions& options = {});

/// Max over all anchors of |stencil combination - g| for a fully known field.
double residual(const CauchyProblem& problem, const Field& field);

/// Scale-aware bound a correctly solved field's residual must stay under.
double residual_tolerance(const CauchyProblem& problem, const Field& field);

} // namespace cauchy3d
