#pragma once

// Internal closed forms shared by the distance and isometry code. Not
// installed; include only from core sources.

#include <Eigen/Dense>
#include <cmath>

#include "isotherm/error.hpp"
#include "isotherm/vec.hpp"

namespace isotherm::detail {

inline Eigen::Vector3d to_eigen(const Vec& v) { return {v.x, v.y, v.z}; }
inline Vec from_eigen(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }

// Moebius translation of the conformal ball of radius rho (curvature
// -1/rho^2) taking z to the origin:
//   T_z(x) = rho^2 [ (rho^2-|z|^2)(x-z) - |x-z|^2 z ]
//            / ( rho^4 + |x|^2 |z|^2 - 2 rho^2 x.z ).
// T_{-z} is its exact inverse.
inline Vec ball_translate(double rho, const Vec& z, const Vec& x) {
  const double rho2 = rho * rho;
  const Vec d = x - z;
  const double num_scale = rho2;
  const Vec numerator =
      num_scale * ((rho2 - norm2(z)) * d - norm2(d) * z);
  const double denominator = rho2 * rho2 + norm2(x) * norm2(z) - 2.0 * rho2 * dot(x, z);
  return numerator / denominator;
}

// Inverse stereographic lift onto the sphere of radius rho in R^{n+1},
// projecting from the north pole; the origin lifts to the south pole.
inline Eigen::Vector4d sphere_lift(double rho, const Vec& x) {
  const double rho2 = rho * rho;
  const double r2 = norm2(x);
  const double denom = rho2 + r2;
  Eigen::Vector4d y;
  y[0] = 2.0 * rho2 * x.x / denom;
  y[1] = 2.0 * rho2 * x.y / denom;
  y[2] = 2.0 * rho2 * x.z / denom;
  y[3] = rho * (r2 - rho2) / denom;
  return y;
}

// Stereographic chart of the sphere of radius rho. Throws PoleError at the
// north pole, whose image is the point at infinity.
inline Vec sphere_project(double rho, const Eigen::Vector4d& y,
                          double pole_tol = 1e-13) {
  const double denom = rho - y[3];
  if (std::abs(denom) <= pole_tol * rho) {
    throw PoleError("sphere_project: point maps to the chart pole");
  }
  const double s = rho / denom;
  return {s * y[0], s * y[1], s * y[2]};
}

// Orthogonal map of R^4 rotating unit vector u into unit vector v inside
// span{u, v}, identity on the orthogonal complement. Requires u != -v.
inline Eigen::Matrix4d rotation_taking(const Eigen::Vector4d& u,
                                       const Eigen::Vector4d& v) {
  const double c = u.dot(v);
  if (c < -1.0 + 1e-14) {
    throw ArgumentError("rotation_taking: antipodal pair is ambiguous");
  }
  const Eigen::Vector4d w = u + v;
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  r -= (w * w.transpose()) / (1.0 + c);
  r += 2.0 * v * u.transpose();
  return r;
}

}  // namespace isotherm::detail
