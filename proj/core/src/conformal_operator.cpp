#include "isotherm/conformal_operator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace isotherm {

ConformalOperator assemble_conformal_operator(
    const std::shared_ptr<const Grid>& grid, double offset_floor) {
  const int n = grid->interior_count();
  const int dim = grid->space().dim;
  const double h = grid->spacing();
  const double k = grid->space().curvature;

  ConformalOperator op;
  op.grid = grid;
  op.boundary_load = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * (2 * dim + 1));

  for (int row = 0; row < n; ++row) {
    const Vec& p = grid->point(row);
    const double w = 0.5 * (1.0 + k * norm2(p));
    const double coeff = w * w;
    double diag = 0.0;
    for (int a = 0; a < dim; ++a) {
      const Grid::Neighbor minus = grid->neighbor(row, a, 0);
      const Grid::Neighbor plus = grid->neighbor(row, a, 1);
      const double tm =
          minus.row >= 0 ? 1.0 : std::max(minus.offset, offset_floor);
      const double tp =
          plus.row >= 0 ? 1.0 : std::max(plus.offset, offset_floor);
      const double arm_m = tm * h;
      const double arm_p = tp * h;
      const double cm = 2.0 / (arm_m * (arm_m + arm_p));
      const double cp = 2.0 / (arm_p * (arm_m + arm_p));
      diag -= cm + cp;
      if (minus.row >= 0) {
        triplets.emplace_back(row, minus.row, coeff * cm);
      } else {
        op.boundary_load[row] += coeff * cm;
      }
      if (plus.row >= 0) {
        triplets.emplace_back(row, plus.row, coeff * cp);
      } else {
        op.boundary_load[row] += coeff * cp;
      }
    }
    triplets.emplace_back(row, row, coeff * diag);
  }

  op.matrix.resize(n, n);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.makeCompressed();
  return op;
}

double ConformalOperator::gershgorin_bound() const {
  double bound = 0.0;
  for (int col = 0; col < matrix.outerSize(); ++col) {
    // Column sums: A and A^T share a spectrum, so these disks bound it too.
    double acc = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, col); it;
         ++it) {
      acc += std::abs(it.value());
    }
    bound = std::max(bound, acc);
  }
  return bound;
}

}  // namespace isotherm
