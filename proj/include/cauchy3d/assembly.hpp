#pragma once

#include <utility>

#include "cauchy3d/core.hpp"
#include "cauchy3d/linsolve.hpp"

namespace cauchy3d {

/// Cross-section of the unknown prism at one z-layer, together with the
/// vector ordering used by the layer systems.
///
/// Ordering is y-major: vector index = (y - y_first) * width() + (x - x_first).
/// Equation anchors use the same nesting (y0 outer, x0 inner), so row r of the
/// layer matrix belongs to anchor (x0, y0) = (r % width(), r / width()).
struct UnknownRegion {
    int x_first = 0;
    int x_last = 0;
    int y_first = 0;
    int y_last = 0;

    int width() const noexcept { return x_last - x_first + 1; }
    int height() const noexcept { return y_last - y_first + 1; }
    int size() const noexcept { return width() * height(); }

    bool contains(int x, int y) const noexcept {
        return x >= x_first && x <= x_last && y >= y_first && y <= y_last;
    }

    int index_of(int x, int y) const noexcept {
        return (y - y_first) * width() + (x - x_first);
    }

    std::pair<int, int> cell_of(int index) const noexcept {
        return {x_first + index % width(), y_first + index / width()};
    }
};

/// The unknown rectangle for the given extents and apex.
UnknownRegion unknown_region(const DomainSpec& domain, const Stencil& stencil, const Apex& apex);

/// The per-layer coupling matrix among unknowns. Entry (eq (x0,y0), unknown
/// (x,y)) equals coeff(x - x0, y - y0, order) when the offset lies within the
/// stencil spans and 0 otherwise. The matrix is identical for every layer.
Matrix assemble_layer_matrix(const Stencil& stencil, const Apex& apex, const DomainSpec& domain);

/// Right-hand side for layer `layer`: per anchor, g minus the stencil
/// combination of all already-known cells (everything below the layer plus
/// the layer's frame). Throws MissingData when a required cell is unknown.
std::vector<double> assemble_layer_rhs(const CauchyProblem& problem, const Field& field, int layer);

} // namespace cauchy3d
