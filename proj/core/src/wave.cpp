#include "isotherm/wave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isotherm/conformal_operator.hpp"

namespace isotherm {

HeatTrace wave_solve(const std::shared_ptr<const Grid>& grid,
                     const WaveOptions& options) {
  if (options.t_end <= 0.0) throw ArgumentError("wave_solve: t_end <= 0");
  const ConformalOperator op =
      assemble_conformal_operator(grid, options.offset_floor);
  const int n = grid->interior_count();

  const double lambda_bound = op.gershgorin_bound();
  const double dt_max = 0.9 * 2.0 / std::sqrt(lambda_bound);
  double dt = options.dt;
  if (dt == 0.0) {
    dt = dt_max;
  } else if (dt > dt_max) {
    // Report both the spectral bound and the h/(max speed) heuristic it
    // refines, so configs can be fixed without reading the source.
    double speed = 0.0;
    for (int i = 0; i < n; ++i) {
      speed = std::max(
          speed, 0.5 * (1.0 + grid->space().curvature * norm2(grid->point(i))));
    }
    std::ostringstream os;
    os << "wave_solve: dt = " << dt << " violates the stability bound "
       << dt_max << " (0.9 * 2/sqrt(Gershgorin); compare h/max-speed = "
       << grid->spacing() / speed << ")";
    throw StabilityError(os.str());
  }

  std::vector<double> stores = options.store_times;
  std::sort(stores.begin(), stores.end());

  HeatTrace trace;
  trace.grid = grid;
  trace.probe_points = options.probes;
  for (double s : options.transform_s) {
    trace.wave_transforms[s] = Eigen::VectorXd::Zero(n);
  }

  Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);  // v(0) = 0
  // Taylor start consistent with dv/dt(0) = 0: v(dt) = dt^2/2 (L v0 + load).
  Eigen::VectorXd curr = (0.5 * dt * dt) * op.boundary_load;

  auto accumulate_transform = [&](const Eigen::VectorXd& v, double t,
                                  double weight) {
    for (auto& [s, acc] : trace.wave_transforms) {
      const double sq = std::sqrt(s);
      acc += (weight * dt * sq * std::exp(-sq * t)) * v;
    }
  };
  // t = 0 trapezoid endpoint: v = 0, contributes nothing.
  accumulate_transform(curr, dt, 1.0);

  auto record_probes = [&](const Eigen::VectorXd& v, double time_now) {
    if (trace.probe_points.empty()) return;
    GridField field(grid, v, 1.0);
    std::vector<double> row;
    row.reserve(trace.probe_points.size());
    for (const Vec& p : trace.probe_points) row.push_back(field.sample(p));
    trace.probe_times.push_back(time_now);
    trace.probe_values.push_back(std::move(row));
  };
  record_probes(prev, 0.0);
  record_probes(curr, dt);

  std::size_t next_store = 0;
  auto maybe_store = [&](const Eigen::VectorXd& v, double time_now) {
    while (next_store < stores.size() &&
           time_now >= stores[next_store] - 1e-12) {
      trace.times.push_back(time_now);
      trace.fields.push_back(v);
      trace.boundary_values.push_back(1.0);
      ++next_store;
    }
  };
  maybe_store(curr, dt);

  double t = dt;
  long step = 1;
  while (t < options.t_end - 0.5 * dt) {
    Eigen::VectorXd next =
        2.0 * curr - prev + dt * dt * (op.matrix * curr + op.boundary_load);
    prev.swap(curr);
    curr.swap(next);
    ++step;
    t = step * dt;
    const double w = (t >= options.t_end - 0.5 * dt) ? 0.5 : 1.0;
    accumulate_transform(curr, t, w);
    record_probes(curr, t);
    maybe_store(curr, t);
  }
  trace.wave_horizon = t;

  if (trace.times.empty() || trace.times.back() < t - 1e-12) {
    trace.times.push_back(t);
    trace.fields.push_back(curr);
    trace.boundary_values.push_back(1.0);
  }
  return trace;
}

}  // namespace isotherm
