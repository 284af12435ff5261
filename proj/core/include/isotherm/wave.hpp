#pragma once

#include <memory>
#include <vector>

#include "isotherm/heat.hpp"

namespace isotherm {

struct WaveOptions {
  double t_end = 1.0;
  // 0 selects the largest stable step from the assembled operator's
  // Gershgorin bound (with safety 0.9). A positive value is validated
  // against that bound before stepping.
  double dt = 0.0;
  std::vector<double> store_times;
  std::vector<Vec> probes;
  // Streaming Laplace transforms sqrt(s) int v e^{-sqrt(s) t} dt accumulated
  // by the trapezoid rule at every step, one field per listed s.
  std::vector<double> transform_s;
  // Shortley-Weller offsets are clamped below this to keep the explicit
  // step from collapsing on tiny cut cells.
  double offset_floor = 0.2;
};

// Leapfrog solve of d^2 v/dt^2 = L v with v = 1 on the boundary and
// v = dv/dt = 0 at t = 0 (exactly; the first step is the Taylor start
// v(dt) = dt^2/2 * L-load). Throws StabilityError when options.dt violates
// the stability bound.
HeatTrace wave_solve(const std::shared_ptr<const Grid>& grid,
                     const WaveOptions& options);

}  // namespace isotherm
