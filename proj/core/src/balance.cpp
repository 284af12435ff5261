#include "isotherm/balance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isotherm/isometry.hpp"

namespace isotherm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double unit_sphere_area(int dim) {
  return dim == 2 ? 2.0 * kPi : 4.0 * kPi;
}

void require_uniform(std::span<const double> grid, const char* what) {
  if (grid.size() < 5) {
    std::ostringstream os;
    os << "evolution residual: need >= 5 " << what << " samples";
    throw ArgumentError(os.str());
  }
  const double step = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (std::abs((grid[i + 1] - grid[i]) - step) > 1e-9 * (1.0 + step)) {
      std::ostringstream os;
      os << "evolution residual: " << what << " grid must be uniform";
      throw ArgumentError(os.str());
    }
  }
}

}  // namespace

MeanSeries mean_series(const HeatTrace& trace, const Vec& center,
                       std::span<const double> radii,
                       std::span<const double> times, int angular_nodes) {
  if (!trace.grid) throw ArgumentError("mean_series: empty trace");
  const ModelSpace& space = trace.grid->space();
  if (space.dim != 2 && angular_nodes < 64) {
    throw ArgumentError("mean_series: angular rule too coarse");
  }

  MeanSeries series;
  series.center = center;
  series.dim = space.dim;
  series.curvature = space.curvature;
  series.radii.assign(radii.begin(), radii.end());
  series.times.assign(times.begin(), times.end());
  for (double r : radii) {
    series.coord_radii.push_back(coordinate_radius(space, r));
  }

  const Isometry recenter = Isometry::to_origin(space, center).inverse();
  const std::size_t nt = times.size(), nr = radii.size();
  series.mean.resize(nt, nr);
  for (auto& q : series.moment) q = Eigen::MatrixXd::Zero(nt, nr);

  // dTheta quadrature directions (plane: equispaced angles).
  std::vector<Vec> dirs;
  std::vector<double> weights;
  if (space.dim == 2) {
    for (int i = 0; i < angular_nodes; ++i) {
      const double th = 2.0 * kPi * i / angular_nodes;
      dirs.push_back({std::cos(th), std::sin(th), 0.0});
      weights.push_back(2.0 * kPi / angular_nodes);
    }
  } else {
    // Fibonacci rule; adequate for the smooth integrands used here.
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < angular_nodes; ++i) {
      const double zc = 1.0 - 2.0 * (i + 0.5) / angular_nodes;
      const double rr = std::sqrt(std::max(0.0, 1.0 - zc * zc));
      dirs.push_back({rr * std::cos(golden * i), rr * std::sin(golden * i), zc});
      weights.push_back(4.0 * kPi / angular_nodes);
    }
  }

  for (std::size_t it = 0; it < nt; ++it) {
    const GridField field = trace.field_at(trace.index_of_time(times[it]));
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const double t_coord = series.coord_radii[ir];
      double u_acc = 0.0;
      double q_acc[3] = {0.0, 0.0, 0.0};
      for (std::size_t a = 0; a < dirs.size(); ++a) {
        const Vec p = recenter.apply(t_coord * dirs[a]);
        const double v = field.sample(p);
        u_acc += weights[a] * v;
        for (int c = 0; c < space.dim; ++c) {
          q_acc[c] += weights[a] * dirs[a][c] * v;
        }
      }
      series.mean(it, ir) = u_acc;
      for (int c = 0; c < space.dim; ++c) series.moment[c](it, ir) = q_acc[c];
    }
  }
  return series;
}

double mean_evolution_residual(const MeanSeries& series) {
  require_uniform(series.times, "time");
  require_uniform(series.coord_radii, "coordinate-radius");
  const double dt = series.times[1] - series.times[0];
  const double dr = series.coord_radii[1] - series.coord_radii[0];
  const double k = series.curvature;
  const int n = series.dim;

  double worst = 0.0, scale = 0.0;
  for (Eigen::Index it = 1; it + 1 < series.mean.rows(); ++it) {
    for (Eigen::Index ir = 1; ir + 1 < series.mean.cols(); ++ir) {
      const double r = series.coord_radii[ir];
      const double ut =
          (series.mean(it + 1, ir) - series.mean(it - 1, ir)) / (2.0 * dt);
      const double ur =
          (series.mean(it, ir + 1) - series.mean(it, ir - 1)) / (2.0 * dr);
      const double urr = (series.mean(it, ir + 1) - 2.0 * series.mean(it, ir) +
                          series.mean(it, ir - 1)) /
                         (dr * dr);
      const double lhs = 4.0 * r * ut;
      const double t2 = (k * k * std::pow(r, 5) + 2.0 * k * r * r * r + r) * urr;
      const double t3 =
          (n - 1) * (k * k * std::pow(r, 4) + 2.0 * k * r * r + 1.0) * ur;
      worst = std::max(worst, std::abs(lhs - t2 - t3));
      scale = std::max({scale, std::abs(lhs), std::abs(t2), std::abs(t3)});
    }
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

double moment_evolution_residual(const MeanSeries& series) {
  require_uniform(series.times, "time");
  require_uniform(series.coord_radii, "coordinate-radius");
  const double dt = series.times[1] - series.times[0];
  const double dr = series.coord_radii[1] - series.coord_radii[0];
  const double k = series.curvature;
  const int n = series.dim;

  double worst = 0.0, scale = 0.0;
  for (int c = 0; c < n; ++c) {
    const Eigen::MatrixXd& q = series.moment[c];
    for (Eigen::Index it = 1; it + 1 < q.rows(); ++it) {
      for (Eigen::Index ir = 1; ir + 1 < q.cols(); ++ir) {
        const double r = series.coord_radii[ir];
        const double qt = (q(it + 1, ir) - q(it - 1, ir)) / (2.0 * dt);
        const double qr = (q(it, ir + 1) - q(it, ir - 1)) / (2.0 * dr);
        const double qrr =
            (q(it, ir + 1) - 2.0 * q(it, ir) + q(it, ir - 1)) / (dr * dr);
        const double lhs = 4.0 * r * r * qt;
        const double t2 =
            (k * k * std::pow(r, 6) + 2.0 * k * std::pow(r, 4) + r * r) * qrr;
        const double t3 =
            (n - 1) * (k * k * std::pow(r, 5) + 2.0 * k * r * r * r + r) * qr;
        const double t4 = -(n - 1) * q(it, ir);
        worst = std::max(worst, std::abs(lhs - t2 - t3 - t4));
        scale = std::max(
            {scale, std::abs(lhs), std::abs(t2), std::abs(t3), std::abs(t4)});
      }
    }
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

namespace {

// Crude PDE-residual spot check on deep-interior nodes of three consecutive
// equally spaced snapshots; guards the caloric-solution precondition.
void require_caloric(const HeatTrace& trace) {
  if (trace.times.size() < 3) {
    throw PreconditionError("balance_law_check: trace too short");
  }
  // Find a uniformly spaced snapshot triple, preferring late times where the
  // transient is gone.
  std::size_t pick = trace.times.size();
  for (std::size_t i = trace.times.size() - 1; i >= 2; --i) {
    const double d1 = trace.times[i] - trace.times[i - 1];
    const double d0 = trace.times[i - 1] - trace.times[i - 2];
    if (std::abs(d1 - d0) < 1e-9 * (1.0 + d1)) {
      pick = i;
      break;
    }
    if (i == 2) break;
  }
  if (pick == trace.times.size()) return;  // no triple; skip the spot check

  const Grid& grid = *trace.grid;
  const ModelSpace& space = grid.space();
  const double h = grid.spacing();
  const double dt = trace.times[pick] - trace.times[pick - 1];
  const Eigen::VectorXd& um = trace.fields[pick - 2];
  const Eigen::VectorXd& u0 = trace.fields[pick - 1];
  const Eigen::VectorXd& up = trace.fields[pick];

  double worst = 0.0, scale = 0.0;
  int tested = 0;
  for (int row = 0; row < grid.interior_count() && tested < 64;
       row += std::max(1, grid.interior_count() / 64)) {
    bool deep = true;
    double lap = 0.0;
    for (int a = 0; a < space.dim; ++a) {
      const auto& lo = grid.neighbor(row, a, 0);
      const auto& hi = grid.neighbor(row, a, 1);
      if (lo.row < 0 || hi.row < 0) {
        deep = false;
        break;
      }
      lap += (u0[lo.row] - 2.0 * u0[row] + u0[hi.row]) / (h * h);
    }
    if (!deep) continue;
    ++tested;
    const double w = 0.5 * (1.0 + space.curvature * norm2(grid.point(row)));
    const double rhs = w * w * lap;
    const double lhs = (up[row] - um[row]) / (2.0 * dt);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs), 1e-12});
  }
  if (tested > 0 && worst / scale > 0.5) {
    std::ostringstream os;
    os << "balance_law_check: trace is not a caloric solution (normalized "
          "interior residual "
       << worst / scale << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

BalanceReport balance_law_check(const HeatTrace& trace, const Vec& center,
                                std::span<const double> radii,
                                std::span<const double> times,
                                BalanceDirection direction,
                                const BalanceTolerances& tolerances,
                                int angular_nodes) {
  require_caloric(trace);
  const ModelSpace& space = trace.grid->space();
  const MeanSeries series =
      mean_series(trace, center, radii, times, angular_nodes);

  BalanceReport report;
  report.direction = direction;
  report.tolerances = tolerances;

  // Sup norm of the field over the sampled snapshots.
  double norm_v = 0.0;
  for (double t : times) {
    const auto& f = trace.fields[trace.index_of_time(t)];
    norm_v = std::max(norm_v, f.cwiseAbs().maxCoeff());
  }
  report.field_norm = norm_v;
  if (norm_v == 0.0) norm_v = 1.0;  // all-zero field: everything vanishes

  const double area = unit_sphere_area(space.dim);
  for (Eigen::Index it = 0; it < series.mean.rows(); ++it) {
    for (Eigen::Index ir = 0; ir < series.mean.cols(); ++ir) {
      report.means_sup = std::max(
          report.means_sup, std::abs(series.mean(it, ir)) / (norm_v * area));
      double qmag = 0.0;
      for (int c = 0; c < space.dim; ++c) {
        qmag = std::hypot(qmag, series.moment[c](it, ir));
      }
      report.moments_sup =
          std::max(report.moments_sup, qmag / (norm_v * area));
    }
  }

  // Center value and gradient across the sampled times.
  const double gh = 2.0 * trace.grid->spacing();
  for (double t : times) {
    const GridField field = trace.field_at(trace.index_of_time(t));
    report.center_sup =
        std::max(report.center_sup, std::abs(field.sample(center)) / norm_v);
    double g2 = 0.0;
    for (int a = 0; a < space.dim; ++a) {
      Vec e;
      e[a] = gh;
      const double d =
          (field.sample(center + e) - field.sample(center - e)) / (2.0 * gh);
      g2 += d * d;
    }
    // Normalized by the field scale per metric length.
    report.gradient_sup = std::max(
        report.gradient_sup,
        std::sqrt(g2) / (conformal_factor(space, center) * norm_v));
  }

  auto pick = [&](double hyp, double con) {
    report.applicable = hyp < tolerances.hypothesis;
    report.holds = report.applicable && con < tolerances.conclusion;
  };
  switch (direction) {
    case BalanceDirection::kCenterToMeans:
      pick(report.center_sup, report.means_sup);
      break;
    case BalanceDirection::kMeansToCenter:
      pick(report.means_sup, report.center_sup);
      break;
    case BalanceDirection::kGradientToMoments:
      pick(report.gradient_sup, report.moments_sup);
      break;
    case BalanceDirection::kMomentsToGradient:
      pick(report.moments_sup, report.gradient_sup);
      break;
  }
  return report;
}

}  // namespace isotherm
