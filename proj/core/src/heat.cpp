#include "isotherm/heat.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "isotherm/conformal_operator.hpp"

namespace isotherm {

namespace {

using Solver =
    Eigen::BiCGSTAB<Eigen::SparseMatrix<double>,
                    Eigen::IncompleteLUT<double>>;

void check_converged(const Solver& solver, const char* where) {
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << where << ": linear solver did not converge (iterations "
       << solver.iterations() << ", estimated error " << solver.error()
       << ")";
    throw SolverError(os.str());
  }
}

}  // namespace

GridField HeatTrace::field_at(std::size_t index) const {
  return GridField(grid, fields.at(index), boundary_values.at(index));
}

std::size_t HeatTrace::index_of_time(double t) const {
  if (times.empty()) throw ArgumentError("HeatTrace: no stored times");
  std::size_t best = 0;
  double err = std::abs(times[0] - t);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double e = std::abs(times[i] - t);
    if (e < err) {
      err = e;
      best = i;
    }
  }
  if (err > 1e-9 + 1e-6 * t) {
    std::ostringstream os;
    os << "HeatTrace: no snapshot near t = " << t;
    throw ArgumentError(os.str());
  }
  return best;
}

std::vector<double> store_schedule(double t_end, double dt) {
  std::vector<double> times;
  int stride = 1;
  int count_at_stride = 0;
  double t = 0.0;
  long step = 0;
  while (t < t_end - 0.5 * dt) {
    step += stride;
    t = step * dt;
    times.push_back(std::min(t, t_end));
    if (++count_at_stride >= 50) {
      stride *= 5;
      count_at_stride = 0;
    }
  }
  if (times.empty() || times.back() < t_end) times.push_back(t_end);
  return times;
}

HeatTrace heat_solve(const std::shared_ptr<const Grid>& grid,
                     const HeatOptions& options) {
  if (options.t_end <= 0.0) throw ArgumentError("heat_solve: t_end <= 0");

  std::vector<TimeSegment> segments = options.segments;
  if (segments.empty()) {
    if (options.dt <= 0.0) throw ArgumentError("heat_solve: dt <= 0");
    segments.push_back({options.t_end, options.dt});
  }
  segments.back().t_until = options.t_end;

  auto boundary = options.boundary
                      ? options.boundary
                      : [](double) { return 1.0; };

  const ConformalOperator op = assemble_conformal_operator(grid);
  const int n = grid->interior_count();
  Eigen::SparseMatrix<double> identity(n, n);
  identity.setIdentity();

  std::vector<double> stores = options.store_times.empty()
                                   ? store_schedule(options.t_end, segments[0].dt)
                                   : options.store_times;
  std::sort(stores.begin(), stores.end());

  HeatTrace trace;
  trace.grid = grid;
  trace.probe_points = options.probes;

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  double t = 0.0;
  std::size_t next_store = 0;
  int startup_remaining = options.startup_half_steps;

  Solver solver;
  solver.setTolerance(options.solver_tol);
  solver.setMaxIterations(options.solver_max_iterations);
  solver.preconditioner().setDroptol(1e-4);
  solver.preconditioner().setFillfactor(10);
  double factored_dt = -1.0;

  Eigen::SparseMatrix<double> lhs;
  auto refactor = [&](double dt_half) {
    if (dt_half == factored_dt) return;
    lhs = identity - dt_half * op.matrix;
    solver.compute(lhs);
    if (solver.info() != Eigen::Success) {
      throw SolverError("heat_solve: preconditioner setup failed");
    }
    factored_dt = dt_half;
  };

  auto record_probes = [&](double time_now) {
    if (trace.probe_points.empty()) return;
    GridField field(grid, u, boundary(time_now));
    std::vector<double> row;
    row.reserve(trace.probe_points.size());
    for (const Vec& p : trace.probe_points) row.push_back(field.sample(p));
    trace.probe_times.push_back(time_now);
    trace.probe_values.push_back(std::move(row));
  };

  auto maybe_store = [&](double time_now) {
    while (next_store < stores.size() &&
           time_now >= stores[next_store] - 1e-12) {
      trace.times.push_back(time_now);
      trace.fields.push_back(u);
      trace.boundary_values.push_back(boundary(time_now));
      ++next_store;
    }
  };

  record_probes(0.0);

  std::size_t seg = 0;
  while (t < options.t_end - 1e-13) {
    while (seg + 1 < segments.size() && t >= segments[seg].t_until - 1e-13) {
      ++seg;
    }
    const double dt = std::min(segments[seg].dt, options.t_end - t);

    if (startup_remaining > 0) {
      // Implicit Euler over dt/2, twice per nominal step.
      refactor(0.5 * dt);
      for (int sub = 0; sub < 2 && startup_remaining > 0;
           ++sub, --startup_remaining) {
        const double t_next = t + 0.5 * dt;
        const Eigen::VectorXd rhs =
            u + (0.5 * dt) * op.boundary_load * boundary(t_next);
        u = solver.solveWithGuess(rhs, u);
        check_converged(solver, "heat_solve");
        t = t_next;
      }
    } else {
      refactor(0.5 * dt);
      const double t_next = t + dt;
      const Eigen::VectorXd rhs =
          u + (0.5 * dt) * (op.matrix * u) +
          (0.5 * dt) * op.boundary_load * (boundary(t) + boundary(t_next));
      u = solver.solveWithGuess(rhs, u);
      check_converged(solver, "heat_solve");
      t = t_next;
    }

    record_probes(t);
    maybe_store(t);
  }

  if (trace.times.empty() || trace.times.back() < options.t_end - 1e-9) {
    trace.times.push_back(t);
    trace.fields.push_back(u);
    trace.boundary_values.push_back(boundary(t));
  }
  return trace;
}

}  // namespace isotherm
