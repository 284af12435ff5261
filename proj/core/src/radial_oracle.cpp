#include "isotherm/radial_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace isotherm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double RadialProfile::value_at_coordinate(double t) const {
  const std::size_t m = nodes.size();
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double diff = t - nodes[j];
    if (std::abs(diff) < 1e-14 * (1.0 + std::abs(t))) return values[j];
    const double q = bary_weights[j] / diff;
    num += q * values[j];
    den += q;
  }
  return num / den;
}

double RadialProfile::value_at_radius(double r) const {
  return value_at_coordinate(coordinate_radius(space, r));
}

RadialProfile radial_oracle(const ModelSpace& space, double d_star, double s) {
  if (s <= 0.0) throw ArgumentError("radial_oracle: s must be positive");
  if (d_star <= 0.0) throw ArgumentError("radial_oracle: d_star must be > 0");
  const double t_end = coordinate_radius(space, d_star);
  const double k = space.curvature;
  const int n_dim = space.dim;

  // Boundary-layer width in the coordinate radius and the node count needed
  // for the quadratic edge clustering to resolve it.
  const double rim_factor = 2.0 / (1.0 + k * t_end * t_end);
  const double layer = 1.0 / (std::sqrt(s) * rim_factor);
  const int base = static_cast<int>(
      std::ceil(kPi * std::sqrt(0.75 * t_end / std::max(layer, 1e-12))));
  const int N = std::max(128, 4 * base);
  if (N > 1200) {
    std::ostringstream os;
    os << "radial_oracle: s = " << s
       << " demands " << N
       << " nodes; boundary layer unresolvable (use the asymptotic branch "
          "exp(-sqrt(s) dist) instead)";
    throw OracleError(os.str());
  }

  // CGL nodes y_j = cos(pi j / N) mapped to r = t_end (1 - y)/2, so j = 0 is
  // the center and j = N the rim.
  Eigen::VectorXd y(N + 1), r(N + 1);
  for (int j = 0; j <= N; ++j) {
    y[j] = std::cos(kPi * j / N);
    r[j] = 0.5 * t_end * (1.0 - y[j]);
  }
  r[0] = 0.0;
  r[N] = t_end;

  // First derivative matrix in y (Trefethen form, negative-sum diagonal),
  // then chain rule d/dr = -(2/t_end) d/dy.
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(N + 1, N + 1);
  auto c = [N](int j) { return (j == 0 || j == N) ? 2.0 : 1.0; };
  for (int i = 0; i <= N; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j <= N; ++j) {
      if (i == j) continue;
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = (c(i) / c(j)) * sign / (y[i] - y[j]);
      rowsum += d(i, j);
    }
    d(i, i) = -rowsum;
  }
  d *= -2.0 / t_end;
  const Eigen::MatrixXd d2 = d * d;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(N + 1, N + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N + 1);
  a.row(0) = d.row(0);  // W'(0) = 0
  for (int i = 1; i < N; ++i) {
    const double w = 0.5 * (1.0 + k * r[i] * r[i]);
    const double coeff = w * w;
    a.row(i) = coeff * (d2.row(i) + ((n_dim - 1) / r[i]) * d.row(i));
    a(i, i) -= s;
  }
  a(N, N) = 1.0;  // W(rim) = 1
  rhs[N] = 1.0;

  const Eigen::VectorXd w = a.partialPivLu().solve(rhs);

  RadialProfile profile{space, d_star, s, t_end, {}, {}, {}};
  profile.nodes.assign(r.data(), r.data() + N + 1);
  profile.values.assign(w.data(), w.data() + N + 1);
  profile.bary_weights.resize(N + 1);
  for (int j = 0; j <= N; ++j) {
    double bw = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == N) bw *= 0.5;
    profile.bary_weights[j] = bw;
  }
  return profile;
}

}  // namespace isotherm
