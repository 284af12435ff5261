#include "isotherm/isometry.hpp"

#include <cmath>

#include "moebius_detail.hpp"

namespace isotherm {

namespace {

Eigen::Vector4d south_pole(double rho) {
  Eigen::Vector4d s = Eigen::Vector4d::Zero();
  s[3] = -rho;
  return s;
}

// Nearest orthogonal matrix (polar factor); scrubs round-off from composed
// frames without disturbing exact rotations.
Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Eigen::Matrix3d embed_identity(const Eigen::Matrix3d& a, int dim) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r.topLeftCorner(dim, dim) = a.topLeftCorner(dim, dim);
  return r;
}

Eigen::Matrix4d lift_rotation(const Eigen::Matrix3d& a) {
  Eigen::Matrix4d q = Eigen::Matrix4d::Identity();
  q.topLeftCorner<3, 3>() = a;
  return q;
}

}  // namespace

Isometry Isometry::identity(const ModelSpace& space) {
  Isometry iso(space);
  iso.kind_ = space.curvature == 0.0  ? Kind::kEuclideanMotion
              : space.curvature < 0.0 ? Kind::kHyperbolicMoebius
                                      : Kind::kSphericalMoebius;
  return iso;
}

Isometry Isometry::to_origin(const ModelSpace& space, const Vec& z) {
  space.require_admissible(z);
  return from_parts(space, z, Eigen::Matrix3d::Identity());
}

Isometry Isometry::from_parts(const ModelSpace& space, const Vec& z,
                              const Eigen::Matrix3d& rotation) {
  space.require_admissible(z);
  Isometry iso = identity(space);
  iso.z_ = z;
  iso.rot_ = embed_identity(rotation, space.dim);
  if ((iso.rot_ * iso.rot_.transpose() - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff() > 1e-10) {
    throw ArgumentError("Isometry: rotation block is not orthogonal");
  }
  if (space.curvature > 0.0) {
    const double rho = space.radius();
    Eigen::Matrix4d center_map = Eigen::Matrix4d::Identity();
    if (norm(z) > 0.0) {
      center_map = detail::rotation_taking(
          detail::sphere_lift(rho, z) / rho, south_pole(rho) / rho);
    }
    iso.lift_ = lift_rotation(iso.rot_) * center_map;
  }
  return iso;
}

void Isometry::sync_presentation_from_lift() {
  const double rho = space_.radius();
  // z is the preimage of the origin: lift^{-1} maps the south pole to it.
  const Eigen::Vector4d zl = lift_.transpose() * south_pole(rho);
  z_ = detail::sphere_project(rho, zl);
  Eigen::Matrix4d center_map = Eigen::Matrix4d::Identity();
  if (norm(z_) > 1e-300) {
    center_map = detail::rotation_taking(detail::sphere_lift(rho, z_) / rho,
                                         south_pole(rho) / rho);
  }
  const Eigen::Matrix4d a_full = lift_ * center_map.transpose();
  rot_ = orthonormalize(embed_identity(a_full.topLeftCorner<3, 3>(), space_.dim));
}

Vec Isometry::apply(const Vec& x) const {
  space_.require_admissible(x);
  switch (kind_) {
    case Kind::kEuclideanMotion:
      return detail::from_eigen(rot_ * detail::to_eigen(x - z_));
    case Kind::kHyperbolicMoebius:
      return detail::from_eigen(
          rot_ * detail::to_eigen(detail::ball_translate(space_.radius(), z_, x)));
    case Kind::kSphericalMoebius: {
      const double rho = space_.radius();
      const Eigen::Vector4d image = lift_ * detail::sphere_lift(rho, x);
      return detail::sphere_project(rho, image);
    }
  }
  throw Error("Isometry::apply: unreachable");
}

Isometry Isometry::inverse() const {
  Isometry inv = identity(space_);
  switch (kind_) {
    case Kind::kEuclideanMotion:
    case Kind::kHyperbolicMoebius: {
      // (A o T_z)^{-1} = A^T o T_{-A z}; the ball translation satisfies
      // T_{-z} o T_z = id exactly.
      inv.rot_ = rot_.transpose();
      inv.z_ = detail::from_eigen(-(rot_ * detail::to_eigen(z_)));
      return inv;
    }
    case Kind::kSphericalMoebius: {
      inv.lift_ = lift_.transpose();
      inv.sync_presentation_from_lift();
      return inv;
    }
  }
  throw Error("Isometry::inverse: unreachable");
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  if (outer.space_.curvature != inner.space_.curvature ||
      outer.space_.dim != inner.space_.dim) {
    throw ArgumentError("compose: isometries of different spaces");
  }
  const ModelSpace& space = outer.space_;
  Isometry out = Isometry::identity(space);

  if (outer.kind_ == Isometry::Kind::kSphericalMoebius) {
    out.lift_ = outer.lift_ * inner.lift_;
    out.sync_presentation_from_lift();
    return out;
  }

  if (outer.kind_ == Isometry::Kind::kEuclideanMotion) {
    // A2 (A1 (x - z1) - z2) = (A2 A1)(x - (z1 + A1^T z2)).
    out.rot_ = outer.rot_ * inner.rot_;
    out.z_ = inner.z_ + detail::from_eigen(inner.rot_.transpose() *
                                           detail::to_eigen(outer.z_));
    return out;
  }

  // Hyperbolic case. The composite sends w to the origin, where
  // w = T_{-z1}(A1^T z2); what remains is an origin-fixing isometry of the
  // ball, hence linear orthogonal. Moebius maps that are linear are linear
  // everywhere, so the matrix is read off exactly at finite points.
  const double rho = space.radius();
  const Vec w = detail::ball_translate(
      rho, -inner.z_,
      detail::from_eigen(inner.rot_.transpose() * detail::to_eigen(outer.z_)));
  auto composite_apply = [&](const Vec& x) {
    return outer.apply(inner.apply(x));
  };
  const double t = 0.25 * rho;
  Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
  for (int i = 0; i < space.dim; ++i) {
    Vec e;
    e[i] = 1.0;
    const Vec col =
        composite_apply(detail::ball_translate(rho, -w, t * e)) / t;
    b.col(i) = detail::to_eigen(col);
  }
  out.rot_ = orthonormalize(embed_identity(b, space.dim));
  out.z_ = w;
  return out;
}

double invariance_residual(const ModelSpace& space, const Isometry& iso,
                           const std::function<double(const Vec&)>& u,
                           std::span<const Vec> probes, double fd_step) {
  const double h = fd_step;
  auto coefficient = [&](const Vec& x) {
    const double w = 0.5 * (1.0 + space.curvature * norm2(x));
    return w * w;
  };
  auto flat_laplacian_of = [&](auto&& f, const Vec& x) {
    double acc = 0.0;
    const double fx = f(x);
    for (int i = 0; i < space.dim; ++i) {
      Vec e;
      e[i] = h;
      acc += (f(x + e) - 2.0 * fx + f(x - e)) / (h * h);
    }
    return acc;
  };

  double worst = 0.0;
  for (const Vec& x : probes) {
    space.require_admissible(x);
    const Vec y = iso.apply(x);
    const double lhs = coefficient(y) * flat_laplacian_of(u, y);
    auto pulled = [&](const Vec& p) { return u(iso.apply(p)); };
    const double rhs = coefficient(x) * flat_laplacian_of(pulled, x);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace isotherm
