#include "isotherm/elliptic.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <cmath>
#include <sstream>

namespace isotherm {

EllipticResult elliptic_solve(const std::shared_ptr<const Grid>& grid,
                              double s, const EllipticOptions& options) {
  return elliptic_solve(assemble_conformal_operator(grid), s, options);
}

EllipticResult elliptic_solve(const ConformalOperator& op, double s,
                              const EllipticOptions& options) {
  if (s <= 0.0) throw ArgumentError("elliptic_solve: s must be positive");
  const int n = op.grid->interior_count();

  Eigen::SparseMatrix<double> shifted = op.matrix;
  for (int i = 0; i < n; ++i) shifted.coeffRef(i, i) -= s;
  shifted.makeCompressed();

  Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>>
      solver;
  solver.setTolerance(options.solver_tol);
  solver.setMaxIterations(options.solver_max_iterations);
  solver.preconditioner().setDroptol(1e-4);
  solver.preconditioner().setFillfactor(10);
  solver.compute(shifted);
  if (solver.info() != Eigen::Success) {
    throw SolverError("elliptic_solve: preconditioner setup failed");
  }

  const Eigen::VectorXd rhs = -op.boundary_load;
  Eigen::VectorXd w = solver.solve(rhs);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "elliptic_solve(s=" << s << "): no convergence after "
       << solver.iterations() << " iterations (estimated error "
       << solver.error() << ")";
    throw SolverError(os.str());
  }

  EllipticResult result{GridField(op.grid, Eigen::VectorXd(), 1.0), 0,
                        static_cast<int>(solver.iterations()),
                        solver.error()};
  for (int i = 0; i < n; ++i) {
    if (std::abs(w[i]) < options.clamp_floor) {
      w[i] = options.clamp_floor;
      ++result.clamped;
    }
  }
  result.field = GridField(op.grid, std::move(w), 1.0);
  return result;
}

}  // namespace isotherm
