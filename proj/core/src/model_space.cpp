#include "isotherm/model_space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "moebius_detail.hpp"

namespace isotherm {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string point_str(const Vec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double ModelSpace::radius() const {
  if (curvature == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(std::abs(curvature));
}

bool ModelSpace::admissible(const Vec& x, double slack) const {
  if (curvature == 0.0) return true;
  const double rho = radius();
  if (curvature < 0.0) return norm(x) < rho * (1.0 - 1e-14) + slack;
  return norm(x) <= rho * (1.0 + slack);
}

void ModelSpace::require_admissible(const Vec& x) const {
  if (!admissible(x)) {
    std::ostringstream os;
    os << "point " << point_str(x) << " outside the admissible region (|x| = "
       << norm(x) << ", limit " << radius() << ")";
    throw DomainError(os.str());
  }
}

double ModelSpace::max_radial_distance() const {
  if (curvature > 0.0) return 0.5 * kPi / std::sqrt(curvature);
  return std::numeric_limits<double>::infinity();
}

double conformal_factor(const ModelSpace& space, const Vec& x) {
  space.require_admissible(x);
  return 2.0 / (1.0 + space.curvature * norm2(x));
}

double radial_distance(const ModelSpace& space, double t) {
  if (t < 0.0) throw DomainError("radial_distance: negative coordinate norm");
  const double k = space.curvature;
  if (k == 0.0) return 2.0 * t;
  const double sk = std::sqrt(std::abs(k));
  if (k > 0.0) return (2.0 / sk) * std::atan(sk * t);
  // k < 0: admissible rays stop at the rim |x| = radius.
  if (t >= space.radius()) {
    throw DomainError("radial_distance: coordinate norm reaches the rim");
  }
  return (2.0 / sk) * std::atanh(sk * t);
}

double coordinate_radius(const ModelSpace& space, double r) {
  if (r < 0.0) throw DomainError("coordinate_radius: negative geodesic length");
  if (r == 0.0) return 0.0;
  if (space.curvature > 0.0 && r > space.max_radial_distance() * (1.0 + 1e-12)) {
    throw DomainError("coordinate_radius: radius exceeds the hemisphere");
  }
  if (space.curvature == 0.0) return 0.5 * r;

  // Monotone scalar inversion: bracket, bisect, then polish with Newton.
  // The integrand 2/(1+k t^2) is the derivative used in the Newton step.
  double lo = 0.0;
  double hi = space.curvature > 0.0 ? space.radius() : space.radius() * 0.5;
  if (space.curvature < 0.0) {
    while (radial_distance(space, hi) < r) {
      hi = 0.5 * (hi + space.radius());
      if (space.radius() - hi < 1e-15 * space.radius()) break;
    }
  } else {
    // Hemisphere: r <= pi rho / 2 maps into [0, rho]; tiny slack for round-off.
    hi = space.radius() * (1.0 + 1e-12);
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (radial_distance(space, mid) < r) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double f = radial_distance(space, t) - r;
    const double df = 2.0 / (1.0 + space.curvature * t * t);
    const double step = f / df;
    double next = t - step;
    if (next < lo || next > hi) break;
    t = next;
    if (std::abs(step) < 1e-16 * (1.0 + t)) break;
  }
  return t;
}

double generalized_sin(const ModelSpace& space, double r) {
  if (r < 0.0) throw DomainError("generalized_sin: negative radius");
  const double k = space.curvature;
  if (k == 0.0) return r;
  const double sk = std::sqrt(std::abs(k));
  if (k > 0.0) {
    if (sk * r >= kPi) {
      throw DomainError("generalized_sin: radius beyond the antipode");
    }
    return std::sin(sk * r) / sk;
  }
  return std::sinh(sk * r) / sk;
}

double generalized_cos(const ModelSpace& space, double r) {
  if (r < 0.0) throw DomainError("generalized_cos: negative radius");
  const double k = space.curvature;
  if (k == 0.0) return 1.0;
  const double sk = std::sqrt(std::abs(k));
  if (k > 0.0) {
    if (sk * r >= kPi) {
      throw DomainError("generalized_cos: radius beyond the antipode");
    }
    return std::cos(sk * r);
  }
  return std::cosh(sk * r);
}

double sphere_curvature(const ModelSpace& space, double r) {
  if (r == 0.0) {
    throw SingularityError("sphere_curvature: radius 0 is singular");
  }
  return generalized_cos(space, r) / generalized_sin(space, r);
}

Vec exp_from_origin(const ModelSpace& space, double r, const Vec& direction) {
  if (std::abs(norm(direction) - 1.0) > 1e-9) {
    throw ArgumentError("exp_from_origin: direction must be a unit vector");
  }
  return coordinate_radius(space, r) * direction;
}

double geodesic_distance(const ModelSpace& space, const Vec& x, const Vec& y) {
  space.require_admissible(x);
  space.require_admissible(y);
  const double k = space.curvature;
  if (k == 0.0) return 2.0 * norm(x - y);
  if (k < 0.0) {
    const Vec image = detail::ball_translate(space.radius(), x, y);
    return radial_distance(space, norm(image));
  }
  // k > 0: rotate the lifted x to the south pole, read off the image of y.
  const double rho = space.radius();
  const Eigen::Vector4d yx = detail::sphere_lift(rho, x);
  const Eigen::Vector4d yy = detail::sphere_lift(rho, y);
  Eigen::Vector4d south = Eigen::Vector4d::Zero();
  south[3] = -rho;
  if ((yx / rho).dot(south / rho) < -1.0 + 1e-14) {
    // x at the pole preimage: antipodal within the closed hemisphere can
    // only happen on the rim; the distance is half the great circle.
    return radial_distance(space, norm(y));
  }
  const Eigen::Matrix4d rot = detail::rotation_taking(yx / rho, south / rho);
  const Eigen::Vector4d image = rot * yy;
  if (image[3] >= rho * (1.0 - 1e-15)) {
    // Image at the chart pole: y is antipodal to x.
    return kPi * rho;
  }
  return radial_distance(space, norm(detail::sphere_project(rho, image)));
}

ChristoffelSymbols christoffel_symbols(const ModelSpace& space, const Vec& x) {
  space.require_admissible(x);
  ChristoffelSymbols sym;
  sym.dim = space.dim;
  const double k = space.curvature;
  const double w = 1.0 + k * norm2(x);
  // d_i phi for phi = log(2) - log(1 + k|x|^2).
  double dphi[3];
  for (int i = 0; i < 3; ++i) dphi[i] = -2.0 * k * x[i] / w;
  for (int q = 0; q < space.dim; ++q) {
    for (int i = 0; i < space.dim; ++i) {
      for (int j = 0; j < space.dim; ++j) {
        double v = 0.0;
        if (q == i) v += dphi[j];
        if (q == j) v += dphi[i];
        if (i == j) v -= dphi[q];
        sym.value[q][i][j] = v;
      }
    }
  }
  return sym;
}

double transfer_curvature(const ModelSpace& space, double projected_curvature,
                          double r) {
  return projected_curvature * generalized_cos(space, r);
}

}  // namespace isotherm
