#pragma once

#include <array>
#include <vector>

#include "cauchy3d/error.hpp"

namespace cauchy3d {

/// Cartesian lattice point (x, y, z).
using Triple = std::array<int, 3>;

/// Coefficient tensor of a constant-coefficient difference operator on Z^3.
///
/// A stencil with spans (sx, sy) and order m applies, at anchor (x0, y0, z0),
/// the linear combination
///
///     sum_{dz=0..m} sum_{dy=0..sy} sum_{dx=0..sx} coeff(dx,dy,dz) * f(x0+dx, y0+dy, z0+dz).
///
/// Invariants: the tensor is dense and rectangular, the order is at least 1,
/// and the top layer dz = m is not identically zero.
class Stencil {
public:
    /// Builds a stencil from nested coefficient layers ordered [z][y][x];
    /// spans and order are inferred from the array shape.
    static Stencil from_layers(const std::vector<std::vector<std::vector<double>>>& layers);

    int span_x() const noexcept { return span_x_; }
    int span_y() const noexcept { return span_y_; }
    /// Order in z (the paper-facing "number of layers minus one").
    int order() const noexcept { return order_; }

    /// Coefficient at offset (dx, dy, dz); offsets outside the spans are invalid.
    double coeff(int dx, int dy, int dz) const;

    /// Sum of |coeff| over all offsets.
    double abs_sum() const;

private:
    Stencil() = default;

    int span_x_ = 0;
    int span_y_ = 0;
    int order_ = 0;
    std::vector<double> coeffs_; // index ((dz * (span_y+1)) + dy) * (span_x+1) + dx
};

/// Characteristic polynomial of the operator evaluated at (s, w, v):
/// sum of coeff(dx,dy,dz) * s^dx * w^dy * v^dz.
double char_poly_eval(const Stencil& stencil, double s, double w, double v);

/// The distinguished top-layer offset each equation is solved for.
/// Its z component is always the stencil order.
struct Apex {
    int x = 0;
    int y = 0;
};

/// Extents of the solution parallelepiped: 0 <= x <= max_x, 0 <= y <= max_y,
/// 0 <= z <= max_z.
struct DomainSpec {
    int max_x = 0;
    int max_y = 0;
    int max_z = 0;
};

/// Cartesian (x,y,z) -> matrix (row, column, layer) coordinates, one-based.
Triple to_matrix_coords(const Triple& cartesian);

/// Inverse of to_matrix_coords.
Triple from_matrix_coords(const Triple& matrix);

/// Value grid over a parallelepiped with a known/unknown mask per cell.
/// Known cells always hold finite values.
class Field {
public:
    Field() = default;
    explicit Field(const DomainSpec& domain);

    int max_x() const noexcept { return nx_ - 1; }
    int max_y() const noexcept { return ny_ - 1; }
    int max_z() const noexcept { return nz_ - 1; }

    double at(int x, int y, int z) const;
    bool known(int x, int y, int z) const;

    /// Stores a value and marks the cell known.
    void set(int x, int y, int z, double value);
    /// Marks the cell unknown again (value resets to zero).
    void set_unknown(int x, int y, int z);

    bool fully_known() const;
    /// Max |value| over known cells (0 for an all-unknown field).
    double max_abs() const;

private:
    std::size_t index(int x, int y, int z) const;

    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<double> values_;
    std::vector<char> known_;
};

/// The Cauchy problem: operator stencil, apex, domain, initial data on L,
/// and the right-hand side g given per equation anchor.
///
/// The unknown set is the translated prism
///   apex.x <= x <= apex.x + max_x - span_x,
///   apex.y <= y <= apex.y + max_y - span_y,  z >= order;
/// L is its complement in the domain. `initial` is known exactly on L.
/// `rhs` is ordered [z0][y0][x0] over anchors and may be empty (all zeros).
struct CauchyProblem {
    Stencil stencil;
    Apex apex;
    DomainSpec domain;
    Field initial;
    std::vector<double> rhs;

    int anchors_x() const noexcept { return domain.max_x - stencil.span_x() + 1; }
    int anchors_y() const noexcept { return domain.max_y - stencil.span_y() + 1; }
    int anchors_z() const noexcept { return domain.max_z - stencil.order() + 1; }

    double rhs_at(int x0, int y0, int z0) const;
    double rhs_max_abs() const;

    /// True iff the cell belongs to the unknown prism (the complement of L).
    bool in_unknown_set(int x, int y, int z) const;
};

/// Validates the pieces and assembles a CauchyProblem. An empty rhs means
/// an identically zero right-hand side.
CauchyProblem make_problem(Stencil stencil, Apex apex, DomainSpec domain, Field initial,
                           std::vector<double> rhs = {});

} // namespace cauchy3d
