#pragma once

#include <optional>

#include "isotherm/error.hpp"
#include "isotherm/vec.hpp"

namespace isotherm {

// The simply connected space of constant sectional curvature k, realized in
// conformal coordinates on R^n with metric
//
//     g_ij = 4 delta_ij / (1 + k |x|^2)^2 .
//
// This chart is the single canonical representation used everywhere in the
// library; the embedded sphere / hyperboloid pictures appear only inside the
// derivations of a few operations and are never materialized as data.
//
// Admissible coordinates:
//   k < 0 : |x| <  radius()          (open ball)
//   k > 0 : |x| <= radius()          (closed southern-hemisphere image)
//   k = 0 : all of R^n
//
// Note the k = 0 metric is 4*delta, not delta: geodesic distances at k = 0
// are exactly twice the Euclidean coordinate distances. This keeps every
// formula uniform in k and is assumed by all call sites.
struct ModelSpace {
  double curvature = 0.0;  // sectional curvature k, units 1/length^2
  int dim = 2;             // ambient dimension n >= 2

  ModelSpace(double k, int n) : curvature(k), dim(n) {
    if (n < 2) throw ArgumentError("ModelSpace: dimension must be >= 2");
  }

  // 1/sqrt(|k|) for k != 0. Meaningless (infinity) for the flat space.
  double radius() const;

  bool flat() const { return curvature == 0.0; }

  // True when x lies in the admissible coordinate region (see above).
  // `slack` loosens the boundary comparison; interpolation and root finding
  // near the rim need a few ulps of headroom.
  bool admissible(const Vec& x, double slack = 1e-12) const;

  // Throws DomainError when not admissible.
  void require_admissible(const Vec& x) const;

  // Largest admissible geodesic distance from the origin:
  //   pi/(2 sqrt k) for k > 0 (hemisphere), +inf otherwise.
  double max_radial_distance() const;
};

// Conformal factor e^phi = 2 / (1 + k|x|^2), so that ds = e^phi |dx|.
// Strictly positive on the admissible region.
double conformal_factor(const ModelSpace& space, const Vec& x);

// Geodesic length of the straight coordinate ray from the origin out to
// coordinate norm t, i.e. the integral of the conformal factor along it.
// Strictly increasing in t; equals 2t for flat space.
double radial_distance(const ModelSpace& space, double t);

// Inverse of radial_distance: the coordinate norm whose ray has geodesic
// length r. Solved by bracketed bisection polished with Newton steps; the
// round trip radial_distance(coordinate_radius(r)) = r holds to ~1e-13
// relative. For k > 0 the input is restricted to the hemisphere,
// r <= pi/(2 sqrt k).
double coordinate_radius(const ModelSpace& space, double r);

// Angular metric coefficient of the geodesic polar chart at distance r from
// a point: sin(sqrt(k) r)/sqrt(k), or r, or sinh(sqrt(-k) r)/sqrt(-k).
double generalized_sin(const ModelSpace& space, double r);

// Its derivative in r: cos(sqrt(k) r), or 1, or cosh(sqrt(-k) r).
double generalized_cos(const ModelSpace& space, double r);

// Common principal curvature of a geodesic sphere of geodesic radius r,
// with respect to the inward normal:
//   sqrt(k) cot(sqrt(k) r) | 1/r | sqrt(-k) coth(sqrt(-k) r).
// Equals generalized_cos/generalized_sin pointwise and is strictly
// decreasing in r. Throws SingularityError at r = 0.
double sphere_curvature(const ModelSpace& space, double r);

// Point at geodesic distance r from the origin in unit direction `direction`
// (|direction| = 1 to 1e-9, else ArgumentError). In this chart that is just
// coordinate_radius(r) * direction.
Vec exp_from_origin(const ModelSpace& space, double r, const Vec& direction);

// Geodesic distance induced by the metric. Computed by moving x to the
// origin with the canonical point-to-origin isometry and measuring the
// radial distance of the image of y. Symmetric, nonnegative, zero iff x = y.
double geodesic_distance(const ModelSpace& space, const Vec& x, const Vec& y);

// Christoffel symbols of the conformal metric at x. For g = e^{2 phi} delta,
//   Gamma^q_ij = d_j phi delta_iq + d_i phi delta_jq - d_q phi delta_ij,
// with phi = log(2/(1 + k|x|^2)). Symmetric in (i, j); identically zero for
// flat space and at the origin.
struct ChristoffelSymbols {
  int dim = 2;
  // gamma[q][i][j]
  double value[3][3][3] = {};
  double operator()(int q, int i, int j) const { return value[q][i][j]; }
};

ChristoffelSymbols christoffel_symbols(const ModelSpace& space, const Vec& x);

// Principal-curvature transfer of the orthogonal projection onto the
// equatorial plane: a surface tangent to a geodesic sphere of radius R has
// metric principal curvatures equal to the Euclidean principal curvatures of
// its projected image times generalized_cos(R). The identity map for k = 0.
double transfer_curvature(const ModelSpace& space, double projected_curvature,
                          double r);

}  // namespace isotherm
