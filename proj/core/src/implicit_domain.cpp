#include "isotherm/implicit_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "isotherm/isometry.hpp"

namespace isotherm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kDenseBoundaryNodes = 512;

Vec planar_dir(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

// Near-uniform unit directions on S^2 (Fibonacci lattice).
std::vector<Vec> fibonacci_dirs(int m) {
  std::vector<Vec> dirs;
  dirs.reserve(m);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < m; ++i) {
    const double zc = 1.0 - 2.0 * (i + 0.5) / m;
    const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double ang = golden * i;
    dirs.push_back({r * std::cos(ang), r * std::sin(ang), zc});
  }
  return dirs;
}

}  // namespace

struct ImplicitDomain::Impl {
  ModelSpace space;
  ScalarFn phi;
  Box bbox;
  Vec anchor;
  VecFn grad;
  BoundaryFn boundary;
  ScalarFn exact_signed_distance;

  mutable std::once_flag dense_once;
  mutable std::vector<Vec> dense_points;
  mutable std::vector<double> dense_angles;  // n = 2 only

  Impl(const ModelSpace& s) : space(s) {}

  Vec ray_boundary_point(const Vec& dir) const {
    // Bracket the zero of phi along anchor + t dir, then bisect + secant.
    const double diag = norm(bbox.hi - bbox.lo);
    const double step = diag / 256.0;
    double t_in = 0.0;
    double p_in = phi(anchor);
    if (p_in >= 0.0) {
      throw ArgumentError("boundary_point: anchor is not interior");
    }
    double t_out = step;
    double p_out = phi(anchor + t_out * dir);
    int guard = 0;
    while (p_out < 0.0) {
      t_in = t_out;
      p_in = p_out;
      t_out += step;
      if (++guard > 2048) {
        throw ArgumentError(
            "boundary_point: no sign change along ray (domain not star "
            "shaped w.r.t. anchor?)");
      }
      p_out = phi(anchor + t_out * dir);
    }
    for (int i = 0; i < 200; ++i) {
      // Secant when well-behaved, bisection otherwise.
      double t_mid;
      if (p_out != p_in) {
        t_mid = t_in - p_in * (t_out - t_in) / (p_out - p_in);
        if (!(t_mid > t_in && t_mid < t_out)) t_mid = 0.5 * (t_in + t_out);
      } else {
        t_mid = 0.5 * (t_in + t_out);
      }
      const double p_mid = phi(anchor + t_mid * dir);
      if (p_mid < 0.0) {
        t_in = t_mid;
        p_in = p_mid;
      } else {
        t_out = t_mid;
        p_out = p_mid;
      }
      if (t_out - t_in < 1e-15 * (1.0 + t_out)) break;
    }
    return anchor + 0.5 * (t_in + t_out) * dir;
  }

  Vec boundary_at(const Vec& dir) const {
    return boundary ? boundary(dir) : ray_boundary_point(dir);
  }

  void build_dense_cache() const {
    std::call_once(dense_once, [this] {
      if (space.dim == 2) {
        dense_points.reserve(kDenseBoundaryNodes);
        dense_angles.reserve(kDenseBoundaryNodes);
        for (int i = 0; i < kDenseBoundaryNodes; ++i) {
          const double th = 2.0 * kPi * i / kDenseBoundaryNodes;
          dense_angles.push_back(th);
          dense_points.push_back(boundary_at(planar_dir(th)));
        }
      } else {
        for (const Vec& d : fibonacci_dirs(4 * kDenseBoundaryNodes)) {
          dense_points.push_back(boundary_at(d));
        }
      }
    });
  }
};

ImplicitDomain::ImplicitDomain(const ModelSpace& space, ScalarFn phi, Box bbox,
                               Vec anchor, VecFn grad, BoundaryFn boundary,
                               ScalarFn exact_signed_distance) {
  auto impl = std::make_shared<Impl>(space);
  impl->phi = std::move(phi);
  impl->bbox = bbox;
  impl->anchor = anchor;
  impl->grad = std::move(grad);
  impl->boundary = std::move(boundary);
  impl->exact_signed_distance = std::move(exact_signed_distance);
  impl_ = impl;

  // Spot checks: closure admissible, gradient nondegenerate near the level
  // set, anchor interior.
  if (impl_->phi(anchor) >= 0.0) {
    throw ArgumentError("ImplicitDomain: anchor must satisfy phi < 0");
  }
  const int m_probe = space.dim == 2 ? 64 : 128;
  const auto dirs = space.dim == 2
                        ? [&] {
                            std::vector<Vec> d;
                            for (int i = 0; i < m_probe; ++i)
                              d.push_back(planar_dir(2.0 * kPi * i / m_probe));
                            return d;
                          }()
                        : fibonacci_dirs(m_probe);
  for (const Vec& d : dirs) {
    const Vec q = impl_->boundary_at(d);
    space.require_admissible(q);
    if (norm(grad_phi(q)) < 1e-8) {
      std::ostringstream os;
      os << "ImplicitDomain: |grad phi| degenerate at boundary point " << q;
      throw ArgumentError(os.str());
    }
  }
}

const ModelSpace& ImplicitDomain::space() const { return impl_->space; }
const Box& ImplicitDomain::bbox() const { return impl_->bbox; }
const Vec& ImplicitDomain::anchor() const { return impl_->anchor; }

double ImplicitDomain::phi(const Vec& x) const { return impl_->phi(x); }

Vec ImplicitDomain::grad_phi(const Vec& x) const {
  if (impl_->grad) return impl_->grad(x);
  const double h = 1e-7;
  Vec g;
  for (int i = 0; i < impl_->space.dim; ++i) {
    Vec e;
    e[i] = h;
    g[i] = (impl_->phi(x + e) - impl_->phi(x - e)) / (2.0 * h);
  }
  return g;
}

bool ImplicitDomain::has_exact_distance() const {
  return static_cast<bool>(impl_->exact_signed_distance);
}

Vec ImplicitDomain::boundary_point(const Vec& dir) const {
  return impl_->boundary_at(dir);
}

double ImplicitDomain::signed_boundary_distance(const Vec& x) const {
  if (impl_->exact_signed_distance) return impl_->exact_signed_distance(x);
  impl_->build_dense_cache();
  const ModelSpace& space = impl_->space;

  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < impl_->dense_points.size(); ++i) {
    const double d = geodesic_distance(space, x, impl_->dense_points[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }

  double dist = best_d;
  if (space.dim == 2) {
    // Golden-section polish of theta -> d(x, boundary(theta)) on the
    // bracket around the best dense node. The minimum is quadratically
    // flat, so the distance value converges to machine precision.
    const double span = 2.0 * kPi / kDenseBoundaryNodes;
    double a = impl_->dense_angles[best] - span;
    double b = impl_->dense_angles[best] + span;
    auto f = [&](double th) {
      return geodesic_distance(space, x, impl_->boundary_at(planar_dir(th)));
    };
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 64 && (b - a) > 1e-12; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
    }
    dist = std::min(fc, fd);
  }
  return impl_->phi(x) <= 0.0 ? dist : -dist;
}

double ImplicitDomain::inradius() const {
  return signed_boundary_distance(impl_->anchor);
}

double dist_to_boundary(const ImplicitDomain& domain, const Vec& x) {
  const double sd = domain.signed_boundary_distance(x);
  if (sd < 0.0 && domain.phi(x) > 1e-12) {
    std::ostringstream os;
    os << "dist_to_boundary: point " << x << " lies outside the domain";
    throw DomainError(os.str());
  }
  return std::max(sd, 0.0);
}

BoundarySample sample_boundary(const ImplicitDomain& domain, int m) {
  if (m < 3) throw ArgumentError("sample_boundary: need at least 3 nodes");
  const ModelSpace& space = domain.space();
  BoundarySample out;
  out.points.reserve(m);

  if (space.dim == 2) {
    for (int i = 0; i < m; ++i) {
      out.points.push_back(
          domain.boundary_point(planar_dir(2.0 * kPi * i / m)));
    }
    for (int i = 0; i < m; ++i) {
      const Vec& prev = out.points[(i + m - 1) % m];
      const Vec& next = out.points[(i + 1) % m];
      const double chord = 0.5 * norm(next - prev);
      out.weights.push_back(chord * conformal_factor(space, out.points[i]));
    }
  } else {
    for (const Vec& d : fibonacci_dirs(m)) {
      out.points.push_back(domain.boundary_point(d));
    }
    // Equal-solid-angle rule; exact for geodesic spheres about the anchor,
    // first order otherwise.
    double area = 0.0;
    std::vector<double> local(m);
    for (int i = 0; i < m; ++i) {
      const Vec& p = out.points[i];
      const Vec rel = p - domain.anchor();
      const double r = norm(rel);
      const double f = conformal_factor(space, p);
      local[i] = r * r * f * f;  // euclidean r^2 times metric area factor
      area += local[i];
    }
    const double solid = 4.0 * kPi / m;
    for (int i = 0; i < m; ++i) out.weights.push_back(solid * local[i]);
    (void)area;
  }

  for (const Vec& p : out.points) {
    const Vec g = domain.grad_phi(p);
    const double gn = norm(g);
    if (gn < 1e-12) {
      throw SingularityError("sample_boundary: degenerate gradient");
    }
    // Inward (phi < 0 side), unit length in the metric.
    out.normals.push_back(g * (-1.0 / (gn * conformal_factor(space, p))));
  }
  return out;
}

BoundarySample parallel_surface(const ImplicitDomain& domain, double R,
                                int m) {
  if (R <= 0.0) throw ArgumentError("parallel_surface: R must be positive");
  const double inr = domain.inradius();
  if (R >= inr) {
    std::ostringstream os;
    os << "parallel_surface: level " << R << " at or beyond the inradius "
       << inr << " (empty level set)";
    throw ResolutionError(os.str());
  }
  const ModelSpace& space = domain.space();
  const BoundarySample outer = sample_boundary(domain, m);

  BoundarySample out;
  out.points.reserve(m);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const Vec& q = outer.points[i];
    const Isometry iso = Isometry::to_origin(space, q);
    const Isometry back = iso.inverse();
    // Image of the inward normal direction under the isometry differential,
    // by a forward difference; the follow-up polish is insensitive to the
    // O(delta) direction error.
    const double delta = 1e-7;
    const Vec n_coord = normalized(outer.normals[i]);
    const Vec dir = normalized(iso.apply(q + delta * n_coord));
    auto at = [&](double tau) {
      return back.apply(exp_from_origin(space, tau, dir));
    };
    double tau = R;
    Vec p = at(tau);
    // Newton (secant) on F(p(tau)) - R against the true distance field.
    for (int it = 0; it < 8; ++it) {
      const double f0 = domain.signed_boundary_distance(p) - R;
      if (std::abs(f0) < 1e-10) break;
      const double dtau = 1e-6;
      const double f1 = domain.signed_boundary_distance(at(tau + dtau)) - R;
      const double deriv = (f1 - f0) / dtau;
      if (deriv == 0.0) break;
      tau -= f0 / deriv;
      p = at(tau);
    }
    if (std::abs(domain.signed_boundary_distance(p) - R) > 1e-8) {
      throw ResolutionError("parallel_surface: level-set polish failed");
    }
    out.points.push_back(p);
  }

  // Normals from the distance field, weights by the chord rule.
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const Vec& p = out.points[i];
    const double h = 1e-6;
    Vec g;
    for (int c = 0; c < space.dim; ++c) {
      Vec e;
      e[c] = h;
      g[c] = (domain.signed_boundary_distance(p + e) -
              domain.signed_boundary_distance(p - e)) /
             (2.0 * h);
    }
    out.normals.push_back(g * (1.0 / (norm(g) * conformal_factor(space, p))));
  }
  const int mm = static_cast<int>(out.points.size());
  if (space.dim == 2) {
    for (int i = 0; i < mm; ++i) {
      const Vec& prev = out.points[(i + mm - 1) % mm];
      const Vec& next = out.points[(i + 1) % mm];
      out.weights.push_back(0.5 * norm(next - prev) *
                            conformal_factor(space, out.points[i]));
    }
  } else {
    for (int i = 0; i < mm; ++i) out.weights.push_back(0.0);
  }
  return out;
}

ImplicitDomain make_geodesic_ball(const ModelSpace& space, const Vec& center,
                                  double radius) {
  if (radius <= 0.0) throw ArgumentError("geodesic ball: radius <= 0");
  space.require_admissible(center);
  const Isometry to_center = Isometry::to_origin(space, center);
  const Isometry from_center = to_center.inverse();
  const double t_br = coordinate_radius(space, radius);

  // Boundary (a coordinate sphere after recentring) must stay admissible.
  {
    Vec e1{1.0, 0.0, 0.0};
    for (double sgn : {1.0, -1.0}) {
      const Vec q = from_center.apply(sgn * t_br * e1);
      space.require_admissible(q);
    }
  }

  auto phi = [space, center, radius](const Vec& x) {
    return geodesic_distance(space, x, center) - radius;
  };
  auto exact = [space, center, radius](const Vec& x) {
    return radius - geodesic_distance(space, x, center);
  };
  auto boundary = [space, from_center, t_br](const Vec& dir) {
    return from_center.apply(t_br * dir);
  };

  // Coordinate bounding box from the recentred sphere.
  Box box;
  const double pad = 0.05 * t_br + 1e-3;
  for (int c = 0; c < 3; ++c) {
    box.lo[c] = center[c];
    box.hi[c] = center[c];
  }
  const int m_box = space.dim == 2 ? 128 : 512;
  const auto dirs = space.dim == 2
                        ? [&] {
                            std::vector<Vec> d;
                            for (int i = 0; i < m_box; ++i)
                              d.push_back(planar_dir(2.0 * kPi * i / m_box));
                            return d;
                          }()
                        : fibonacci_dirs(m_box);
  for (const Vec& d : dirs) {
    const Vec q = boundary(d);
    for (int c = 0; c < space.dim; ++c) {
      box.lo[c] = std::min(box.lo[c], q[c] - pad);
      box.hi[c] = std::max(box.hi[c], q[c] + pad);
    }
  }

  return ImplicitDomain(space, phi, box, center, nullptr, boundary, exact);
}

ImplicitDomain make_coordinate_ellipse(const ModelSpace& space, double a,
                                       double b) {
  if (space.dim != 2) {
    throw ArgumentError("ellipse: only the planar case is supported");
  }
  if (a <= 0.0 || b <= 0.0) throw ArgumentError("ellipse: axes must be > 0");
  auto phi = [a, b](const Vec& x) {
    return x.x * x.x / (a * a) + x.y * x.y / (b * b) - 1.0;
  };
  auto grad = [a, b](const Vec& x) {
    return Vec{2.0 * x.x / (a * a), 2.0 * x.y / (b * b), 0.0};
  };
  Box box{{-a - 0.05, -b - 0.05, 0.0}, {a + 0.05, b + 0.05, 0.0}};
  return ImplicitDomain(space, phi, box, Vec{}, grad);
}

ImplicitDomain make_perturbed_ball(const ModelSpace& space, double r0,
                                   double eps, int modes) {
  if (space.dim != 2) {
    throw ArgumentError("perturbed-ball: only the planar case is supported");
  }
  if (r0 <= 0.0 || eps < 0.0 || eps >= 1.0 || modes < 1) {
    throw ArgumentError("perturbed-ball: invalid parameters");
  }
  auto radius_at = [r0, eps, modes](double theta) {
    return r0 * (1.0 + eps * std::cos(modes * theta));
  };
  auto phi = [radius_at](const Vec& x) {
    return norm(x) - radius_at(std::atan2(x.y, x.x));
  };
  auto boundary = [radius_at](const Vec& dir) {
    return radius_at(std::atan2(dir.y, dir.x)) * dir;
  };
  const double rmax = r0 * (1.0 + eps);
  Box box{{-rmax - 0.05, -rmax - 0.05, 0.0}, {rmax + 0.05, rmax + 0.05, 0.0}};
  return ImplicitDomain(space, phi, box, Vec{}, nullptr, boundary);
}

ImplicitDomain standard_shape(const ModelSpace& space, const std::string& name,
                              const std::map<std::string, double>& params) {
  auto get = [&](const std::string& key, double fallback,
                 bool required = false) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (required) {
        throw ArgumentError("standard_shape: missing parameter '" + key +
                            "' for shape '" + name + "'");
      }
      return fallback;
    }
    return it->second;
  };
  if (name == "geodesic-ball") {
    const Vec center{get("center-x", 0.0), get("center-y", 0.0),
                     get("center-z", 0.0)};
    return make_geodesic_ball(space, center, get("radius", 0.0, true));
  }
  if (name == "ellipse") {
    return make_coordinate_ellipse(space, get("a", 0.0, true),
                                   get("b", 0.0, true));
  }
  if (name == "perturbed-ball") {
    return make_perturbed_ball(space, get("r0", 0.0, true), get("eps", 0.0),
                               static_cast<int>(get("modes", 2.0)));
  }
  throw ArgumentError("standard_shape: unknown shape '" + name + "'");
}

}  // namespace isotherm
