#include "isotherm/sphere_integral.hpp"

#include <cmath>
#include <sstream>

#include "isotherm/isometry.hpp"

namespace isotherm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton on the Legendre
// polynomial.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Unit-sphere quadrature (points, dTheta weights) with about m nodes.
void unit_sphere_rule(int dim, int m, std::vector<Vec>& dirs,
                      std::vector<double>& weights) {
  dirs.clear();
  weights.clear();
  if (dim == 2) {
    if (m < 64) throw ArgumentError("sphere quadrature: need m >= 64");
    for (int i = 0; i < m; ++i) {
      const double th = 2.0 * kPi * i / m;
      dirs.push_back({std::cos(th), std::sin(th), 0.0});
      weights.push_back(2.0 * kPi / m);
    }
    return;
  }
  const int n_polar = std::max(8, static_cast<int>(std::sqrt(m / 2.0)));
  const int n_azim = 2 * n_polar;
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(n_polar, gl_nodes, gl_weights);
  for (int j = 0; j < n_polar; ++j) {
    const double c = gl_nodes[j];
    const double sden = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int a = 0; a < n_azim; ++a) {
      const double ph = 2.0 * kPi * a / n_azim;
      dirs.push_back({sden * std::cos(ph), sden * std::sin(ph), c});
      weights.push_back(gl_weights[j] * 2.0 * kPi / n_azim);
    }
  }
}

}  // namespace

double sphere_integral(const ModelSpace& space,
                       const std::function<double(const Vec&)>& f,
                       const Vec& center, double R, int m) {
  const Isometry recenter = Isometry::to_origin(space, center).inverse();
  const double t = coordinate_radius(space, R);
  const double area_factor =
      std::pow(generalized_sin(space, R), space.dim - 1);

  std::vector<Vec> dirs;
  std::vector<double> weights;
  unit_sphere_rule(space.dim, m, dirs, weights);

  double acc = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec p = recenter.apply(t * dirs[i]);
    acc += weights[i] * f(p);
  }
  return acc * area_factor;
}

double sphere_integral(const GridField& field,
                       const std::function<double(const Vec&)>& phi,
                       const Vec& center, double R, int m) {
  auto f = [&](const Vec& p) {
    const double w = phi ? phi(p) : 1.0;
    return w == 0.0 ? 0.0 : w * field.sample(p);
  };
  return sphere_integral(field.grid().space(), f, center, R, m);
}

ScaledSphereIntegrals scaled_sphere_integrals(
    const SLadder& ladder, const std::function<double(const Vec&)>& phi,
    const Vec& center, double R, int m) {
  ScaledSphereIntegrals out;
  const int dim = ladder.grid->space().dim;
  for (std::size_t j = 0; j < ladder.s_values.size(); ++j) {
    const double s = ladder.s_values[j];
    if (std::sqrt(s) * ladder.h > 0.5) {
      std::ostringstream os;
      os << "s = " << s << " excluded: sqrt(s)*h = " << std::sqrt(s) * ladder.h
         << " > 0.5 (boundary layer unresolved)";
      out.warnings.push_back(os.str());
      continue;
    }
    if (ladder.clamped(j)) {
      std::ostringstream os;
      os << "s = " << s << " excluded: solution clamped at the floor";
      out.warnings.push_back(os.str());
      continue;
    }
    const double integral =
        sphere_integral(ladder.fields[j], phi, center, R, m);
    out.s_values.push_back(s);
    out.values.push_back(std::pow(s, 0.25 * (dim - 1)) * integral);
  }
  return out;
}

double tangency_asymptotic_value(
    const ModelSpace& space, double R,
    const std::vector<std::pair<Vec, CurvatureSpectrum>>& contacts,
    const std::function<double(const Vec&)>& phi) {
  const double tau = sphere_curvature(space, R);
  const double hc = generalized_cos(space, R);
  const int n = space.dim;

  double acc = 0.0;
  for (const auto& [point, spectrum] : contacts) {
    if (static_cast<int>(spectrum.values.size()) != n - 1) {
      throw ArgumentError(
          "tangency_asymptotic_value: curvature spectrum has wrong length");
    }
    double product = 1.0;
    for (double lambda : spectrum.values) {
      if (lambda >= tau) {
        std::ostringstream os;
        os << "tangency_asymptotic_value: contact at " << point
           << " violates lambda < tau (" << lambda << " >= " << tau << ")";
        throw HypothesisError(os.str());
      }
      product *= tau - lambda;
    }
    const double bracket = product / std::pow(hc, n - 1);
    acc += (phi ? phi(point) : 1.0) / std::sqrt(bracket);
  }
  return std::pow(2.0 * kPi, 0.5 * (n - 1)) * acc;
}

}  // namespace isotherm
