#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "isotherm/model_space.hpp"
#include "isotherm/vec.hpp"

namespace isotherm {

// A metric isometry of the conformal model, stored as an orthogonal map
// following the canonical center-to-origin map:
//
//   k = 0 : x -> A (x - z)                       (Euclidean motion)
//   k < 0 : x -> A T_z(x)                        (ball Moebius translation)
//   k > 0 : x -> chart( Q lift(x) )              (rotation of the sphere)
//
// where T_z is the Moebius map of the conformal ball with T_z(z) = 0 and,
// for k > 0, Q is an orthogonal matrix of R^{n+1} acting on the embedded
// sphere through the stereographic chart. For k > 0 the (z, A) pair is the
// equivalent presentation Q = lift(A) * R_z with R_z the plane rotation
// taking lift(z) to the south pole; both views are kept in sync.
//
// Instances are immutable and cheap to copy.
class Isometry {
 public:
  enum class Kind { kEuclideanMotion, kHyperbolicMoebius, kSphericalMoebius };

  static Isometry identity(const ModelSpace& space);

  // The canonical isometry taking z to the origin (A = I). For k > 0 and
  // z = 0 this degenerates to the identity rotation.
  static Isometry to_origin(const ModelSpace& space, const Vec& z);

  // General element: the center map for z followed by orthogonal `rotation`
  // (the top-left dim x dim block is used; it must be orthogonal).
  static Isometry from_parts(const ModelSpace& space, const Vec& z,
                             const Eigen::Matrix3d& rotation);

  Vec apply(const Vec& x) const;
  Isometry inverse() const;

  Kind kind() const { return kind_; }
  const ModelSpace& space() const { return space_; }
  // Center parameter: the point this isometry maps to the origin.
  const Vec& center() const { return z_; }
  // The orthogonal factor applied after the center map.
  const Eigen::Matrix3d& rotation() const { return rot_; }

  friend Isometry compose(const Isometry& outer, const Isometry& inner);

 private:
  explicit Isometry(const ModelSpace& space)
      : space_(space),
        rot_(Eigen::Matrix3d::Identity()),
        lift_(Eigen::Matrix4d::Identity()) {}

  void sync_presentation_from_lift();

  ModelSpace space_;
  Kind kind_ = Kind::kEuclideanMotion;
  Vec z_;
  Eigen::Matrix3d rot_;
  Eigen::Matrix4d lift_;  // k > 0 only
};

// Composition applying `inner` first: compose(g, f)(x) = g(f(x)).
Isometry compose(const Isometry& outer, const Isometry& inner);

// Maximum over `probes` of |(Lu)(Phi x) - L(u o Phi)(x)|, with the operator
// L f = ((1+k|x|^2)/2)^2 sum_i d^2 f/dx_i^2 applied on both sides by central
// differences at step `fd_step`. Second-order small for true isometries and
// smooth u; the decay rate under fd_step refinement is the invariance check.
double invariance_residual(const ModelSpace& space, const Isometry& iso,
                           const std::function<double(const Vec&)>& u,
                           std::span<const Vec> probes, double fd_step);

}  // namespace isotherm
