#pragma once

#include <vector>

#include "isotherm/implicit_domain.hpp"
#include "isotherm/model_space.hpp"

namespace isotherm {

// Principal curvatures of a boundary point, with respect to the inward
// normal, measured in the metric. `values` holds the dim-1 curvatures sorted
// descending.
struct CurvatureSpectrum {
  Vec point;
  std::vector<double> values;
};

// Principal curvatures of the surface {phi = 0} at boundary point p: the
// nonzero eigenvalues of minus the metric Hessian of the signed boundary
// distance, deflated along the normal direction. The Hessian is assembled by
// central differences of the signed distance at step 1e-4 (scaled by the
// model radius when curved) and corrected by the Christoffel term; for a
// geodesic sphere of geodesic radius r every value equals
// sphere_curvature(r).
//
// Throws SingularityError when the distance gradient degenerates at p.
CurvatureSpectrum principal_curvatures(const ModelSpace& space,
                                       const ImplicitDomain& domain,
                                       const Vec& p);

}  // namespace isotherm
