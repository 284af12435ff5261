#pragma once

#include <Eigen/Sparse>
#include <memory>

#include "isotherm/grid.hpp"

namespace isotherm {

// Sparse form of L u = ((1+k|x|^2)/2)^2 sum_i d^2 u / dx_i^2 on a grid with
// Dirichlet data: (L u)_row = (matrix * u)_row + boundary_load_row * g where
// g is the uniform boundary value. Away from the boundary each row is the
// standard 2n+1 point stencil scaled by the coefficient; rows next to the
// boundary use the Shortley-Weller unequal-arm second difference.
struct ConformalOperator {
  std::shared_ptr<const Grid> grid;
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd boundary_load;

  // Upper bound on the spectral radius of -matrix (Gershgorin rows); the
  // explicit wave step is stable for dt <= 2/sqrt(bound).
  double gershgorin_bound() const;
};

// `offset_floor` clamps Shortley-Weller offsets from below (used by the
// explicit wave integrator, where tiny cut cells would collapse the stable
// step); 0 keeps the true offsets.
ConformalOperator assemble_conformal_operator(
    const std::shared_ptr<const Grid>& grid, double offset_floor = 0.0);

}  // namespace isotherm
