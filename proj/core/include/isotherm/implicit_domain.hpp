#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "isotherm/model_space.hpp"
#include "isotherm/vec.hpp"

namespace isotherm {

struct Box {
  Vec lo;
  Vec hi;
};

// Quadrature sample of a closed hypersurface: points on the surface, inward
// unit normals measured in the metric, and surface-measure weights (metric
// area element), so that sum_i w_i f(p_i) approximates the surface integral
// of f.
struct BoundarySample {
  std::vector<Vec> points;
  std::vector<Vec> normals;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

// A bounded domain Omega = {phi < 0} of the model space, given by a smooth
// defining function in conformal coordinates. The closure must lie in the
// admissible coordinate region and the gradient of phi must not vanish near
// the zero level set (both spot-checked at construction).
//
// All fixtures are star shaped with respect to `anchor`; the boundary is
// reached from the anchor by ray casting unless the factory installed an
// exact parametrization. Instances are immutable and share state on copy.
class ImplicitDomain {
 public:
  using ScalarFn = std::function<double(const Vec&)>;
  using VecFn = std::function<Vec(const Vec&)>;
  // Exact boundary point in star direction `dir` (unit vector), if known.
  using BoundaryFn = std::function<Vec(const Vec&)>;

  ImplicitDomain(const ModelSpace& space, ScalarFn phi, Box bbox, Vec anchor,
                 VecFn grad = nullptr, BoundaryFn boundary = nullptr,
                 ScalarFn exact_signed_distance = nullptr);

  const ModelSpace& space() const;
  const Box& bbox() const;
  const Vec& anchor() const;

  double phi(const Vec& x) const;
  // Analytic gradient when the factory provided one, otherwise central
  // differences at step 1e-7.
  Vec grad_phi(const Vec& x) const;

  bool contains(const Vec& x) const { return phi(x) < 0.0; }
  bool has_exact_distance() const;

  // Boundary point along the ray from the anchor in unit direction `dir`.
  Vec boundary_point(const Vec& dir) const;

  // Signed geodesic distance to the boundary: positive inside, negative
  // outside, zero on {phi = 0}. Uses the exact closed form when available,
  // otherwise dense boundary sampling refined by a local minimization over
  // the boundary parametrization.
  double signed_boundary_distance(const Vec& x) const;

  // Geodesic distance of the anchor to the boundary; for the star-shaped
  // fixtures used here this is the inradius.
  double inradius() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Geodesic distance from x to the boundary (the function F of the distance
// extractions). Requires x in the closed domain; DomainError otherwise.
double dist_to_boundary(const ImplicitDomain& domain, const Vec& x);

// Quadrature sample of the boundary with m nodes. In the plane the nodes
// follow the star parametrization with chain-rule chord weights; in three
// dimensions only surfaces with an exact parametrization (geodesic spheres)
// get exact weights, generic surfaces get a first-order equal-solid-angle
// rule.
BoundarySample sample_boundary(const ImplicitDomain& domain, int m);

// The inner parallel surface {dist_to_boundary = R}, sampled with m nodes:
// each boundary node is marched inward along the metric normal geodesic and
// polished with root finding on dist_to_boundary - R (|F - R| < 1e-8).
// Throws ResolutionError when R is at least the inradius.
BoundarySample parallel_surface(const ImplicitDomain& domain, double R, int m);

// Fixture factories.
ImplicitDomain make_geodesic_ball(const ModelSpace& space, const Vec& center,
                                  double radius);
ImplicitDomain make_coordinate_ellipse(const ModelSpace& space, double a,
                                       double b);
// Boundary at coordinate radius r0 (1 + eps cos(modes * theta)).
ImplicitDomain make_perturbed_ball(const ModelSpace& space, double r0,
                                   double eps, int modes);

// Factory by name, the shape grammar of the experiment configs:
//   "geodesic-ball"  params: radius, center-x, center-y[, center-z]
//   "ellipse"        params: a, b
//   "perturbed-ball" params: r0, eps, modes
ImplicitDomain standard_shape(const ModelSpace& space, const std::string& name,
                              const std::map<std::string, double>& params);

}  // namespace isotherm
