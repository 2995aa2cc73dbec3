#pragma once

#include <cstddef>

#include "cauchy3d/core.hpp"
#include "cauchy3d/linsolve.hpp"

namespace cauchy3d {

/// One linear system over every unknown cell of the problem at once.
/// Unknowns are indexed layer-major, then y, then x, so the matrix is block
/// lower triangular with the per-layer coupling matrix on the diagonal.
struct GlobalSystem {
    Matrix matrix;
    std::vector<double> rhs;

    int x_first = 0;
    int y_first = 0;
    int z_first = 0;
    int cells_x = 0;
    int cells_y = 0;
    int layers = 0;

    int size() const noexcept { return cells_x * cells_y * layers; }

    int unknown_index(int x, int y, int z) const noexcept {
        return ((z - z_first) * cells_y + (y - y_first)) * cells_x + (x - x_first);
    }

    Triple unknown_cell(int index) const noexcept {
        const int per_layer = cells_x * cells_y;
        return {x_first + index % cells_x, y_first + (index / cells_x) % cells_y,
                z_first + index / per_layer};
    }
};

inline constexpr std::size_t kDefaultOracleCap = 5000;

/// Assembles the global system by a naive loop over stencil offsets; no code
/// is shared with the layer assembly or the sweep.
GlobalSystem build_global_system(const CauchyProblem& problem,
                                 std::size_t cap = kDefaultOracleCap);

/// Brute-force reference solver: one direct LU solve of the global system.
Field oracle_solve(const CauchyProblem& problem, std::size_t cap = kDefaultOracleCap);

} // namespace cauchy3d
