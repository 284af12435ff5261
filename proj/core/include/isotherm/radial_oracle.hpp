#pragma once

#include <vector>

#include "isotherm/model_space.hpp"

namespace isotherm {

// Radial profile W(r) on a geodesic ball centered at the origin, sampled on
// Chebyshev-Gauss-Lobatto nodes in the coordinate radius. Evaluation between
// nodes is barycentric (spectrally accurate).
struct RadialProfile {
  ModelSpace space;
  double d_star = 0.0;            // geodesic radius of the ball
  double s = 0.0;
  double coordinate_extent = 0.0; // coordinate radius of the rim
  std::vector<double> nodes;      // coordinate radii, increasing from 0
  std::vector<double> values;
  std::vector<double> bary_weights;

  double value_at_coordinate(double t) const;
  double value_at_radius(double r) const;  // geodesic radius
  double center_value() const { return values.front(); }
};

// Chebyshev collocation solve of the radial reduction
//   ((1+k r^2)/2)^2 ( W'' + (n-1) W'/r ) = s W,   W'(0) = 0,  W(rim) = 1,
// with r the coordinate radius, on the ball of geodesic radius d_star. This
// is the independent oracle the grid solvers are checked against. Node count
// adapts to the boundary-layer width; OracleError when s is so large the
// layer cannot be resolved (the asymptotic regime).
RadialProfile radial_oracle(const ModelSpace& space, double d_star, double s);

}  // namespace isotherm
