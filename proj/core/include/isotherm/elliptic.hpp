#pragma once

#include <memory>

#include "isotherm/conformal_operator.hpp"
#include "isotherm/grid_field.hpp"

namespace isotherm {

struct EllipticOptions {
  double solver_tol = 1e-10;
  int solver_max_iterations = 20000;
  // Values whose magnitude falls below this floor are clamped (audited via
  // EllipticResult::clamped).
  double clamp_floor = 1e-300;
};

struct EllipticResult {
  GridField field;
  int clamped = 0;      // nodes hit by the floor
  int iterations = 0;
  double error = 0.0;   // solver's estimated relative error
};

// Solves (L - s) W = 0 with W = 1 on the boundary. The solution obeys
// 0 < W <= 1 (discrete maximum principle) and is pointwise nonincreasing
// in s, both up to solver tolerance.
EllipticResult elliptic_solve(const std::shared_ptr<const Grid>& grid,
                              double s, const EllipticOptions& options = {});

// Same, reusing an assembled operator (ladders).
EllipticResult elliptic_solve(const ConformalOperator& op, double s,
                              const EllipticOptions& options = {});

}  // namespace isotherm
