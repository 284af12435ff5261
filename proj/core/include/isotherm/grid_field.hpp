#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>

#include "isotherm/grid.hpp"
#include "isotherm/isometry.hpp"

namespace isotherm {

// Scalar field sampled at the interior nodes of a Grid, plus the uniform
// Dirichlet value active on the boundary (when known). Interpolation is
// separable cubic Lagrange where the full 4^n stencil is interior, falling
// back to multilinear with Shortley-Weller ghost extrapolation next to the
// boundary; the ghost path needs the boundary value.
class GridField {
 public:
  GridField() = default;
  GridField(std::shared_ptr<const Grid> grid, Eigen::VectorXd values,
            std::optional<double> boundary_value = std::nullopt);

  const Grid& grid() const { return *grid_; }
  const std::shared_ptr<const Grid>& grid_ptr() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXd& values() { return values_; }
  std::optional<double> boundary_value() const { return boundary_value_; }

  double operator[](int row) const { return values_[row]; }

  // Interpolated value at x. Throws CoverageError when the stencil leaves
  // the data (and no ghost value can be built).
  double sample(const Vec& x) const;

 private:
  std::shared_ptr<const Grid> grid_;
  Eigen::VectorXd values_;
  std::optional<double> boundary_value_;
};

// Realizes u o Phi on `target`: each target interior node takes the
// interpolated source value at iso.apply(node). CoverageError (naming the
// first offending node) if an image leaves the source data.
GridField pullback_field(const Isometry& iso, const GridField& source,
                         const std::shared_ptr<const Grid>& target);

// Same-grid overload (rotations and other domain symmetries).
GridField pullback_field(const Isometry& iso, const GridField& source);

}  // namespace isotherm
