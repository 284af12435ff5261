#pragma once

#include <memory>
#include <vector>

#include "isotherm/elliptic.hpp"
#include "isotherm/grid_field.hpp"

namespace isotherm {

// Geometric family of elliptic solutions W(s_j, .) on one grid; the driver
// of every large-s extraction. Entries whose solve hit the underflow clamp
// are flagged and excluded from fits.
struct SLadder {
  std::shared_ptr<const Grid> grid;
  std::vector<double> s_values;
  std::vector<GridField> fields;
  std::vector<int> clamp_counts;
  double h = 0.0;

  bool clamped(std::size_t j) const { return clamp_counts[j] > 0; }
};

struct LadderOptions {
  EllipticOptions elliptic;
  // Solves across s are independent; run up to this many concurrently.
  int threads = 1;
};

std::vector<double> geometric_ladder(double s0, double factor, int count);

SLadder build_ladder(const std::shared_ptr<const Grid>& grid,
                     std::vector<double> s_values,
                     const LadderOptions& options = {});

}  // namespace isotherm
