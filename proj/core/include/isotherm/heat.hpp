#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "isotherm/grid_field.hpp"

namespace isotherm {

// Time history of an evolution solve: snapshot fields at selected times
// (strictly increasing, all > 0), plus probe values recorded at every
// accepted step. Wave solves may additionally carry streaming Laplace
// transforms accumulated at full step resolution (keyed by s).
struct HeatTrace {
  std::shared_ptr<const Grid> grid;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> fields;
  std::vector<double> boundary_values;

  std::vector<Vec> probe_points;
  std::vector<double> probe_times;
  std::vector<std::vector<double>> probe_values;  // [step][probe]

  std::map<double, Eigen::VectorXd> wave_transforms;
  double wave_horizon = 0.0;  // T of the streaming transforms

  GridField field_at(std::size_t index) const;
  // Index of the stored time nearest to t (ArgumentError if off by more
  // than half a step).
  std::size_t index_of_time(double t) const;
};

// Piecewise-constant step schedule: use `dt` until `t_until`, in order.
struct TimeSegment {
  double t_until;
  double dt;
};

struct HeatOptions {
  double t_end = 1.0;
  double dt = 1e-3;                        // single-segment default
  std::vector<TimeSegment> segments;       // overrides dt when nonempty
  std::function<double(double)> boundary;  // default: constant 1
  std::vector<double> store_times;         // defaults to store_schedule(...)
  std::vector<Vec> probes;
  int startup_half_steps = 8;  // damped implicit-Euler halves before CN
  double solver_tol = 1e-10;
  int solver_max_iterations = 4000;
};

// Crank-Nicolson solve of du/dt = L u with Dirichlet data `boundary(t)` on
// the cut boundary and u = 0 at t = 0. The start runs `startup_half_steps`
// implicit-Euler half steps to damp the incompatible corner (the boundary
// jumps to 1 at t = 0) before switching to CN. Solutions obey the discrete
// maximum principle up to solver tolerance.
HeatTrace heat_solve(const std::shared_ptr<const Grid>& grid,
                     const HeatOptions& options);

// Snapshot schedule thinning geometrically: every step early, sparser later.
// Suitable as quadrature support for Laplace transforms.
std::vector<double> store_schedule(double t_end, double dt);

}  // namespace isotherm
