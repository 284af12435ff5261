#include "isotherm/grid_field.hpp"

#include <cmath>
#include <sstream>

namespace isotherm {

namespace {

// Cubic Lagrange weights on nodes {-1, 0, 1, 2} at local coordinate
// t in [0, 1] measured from node 0.
void cubic_weights(double t, double w[4]) {
  w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
  w[1] = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  w[2] = -(t + 1.0) * t * (t - 2.0) / 2.0;
  w[3] = (t + 1.0) * t * (t - 1.0) / 6.0;
}

}  // namespace

GridField::GridField(std::shared_ptr<const Grid> grid, Eigen::VectorXd values,
                     std::optional<double> boundary_value)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      boundary_value_(boundary_value) {
  if (values_.size() != grid_->interior_count()) {
    throw ArgumentError("GridField: value count != interior node count");
  }
}

double GridField::sample(const Vec& x) const {
  const Grid& g = *grid_;
  const int dim = g.space().dim;
  const double h = g.spacing();
  const Vec& o = g.origin();

  double local[3] = {0.0, 0.0, 0.0};
  int base[3] = {0, 0, 0};
  for (int a = 0; a < dim; ++a) {
    const double c = (x[a] - o[a]) / h;
    base[a] = static_cast<int>(std::floor(c));
    local[a] = c - base[a];
  }

  // Full cubic stencil if every node is interior.
  {
    bool ok = true;
    double acc = 0.0;
    double wx[4], wy[4], wz[4];
    cubic_weights(local[0], wx);
    cubic_weights(local[1], wy);
    cubic_weights(local[2], wz);
    const int kz0 = dim == 3 ? -1 : 0;
    const int kz1 = dim == 3 ? 2 : 0;
    for (int dk = kz0; dk <= kz1 && ok; ++dk) {
      for (int dj = -1; dj <= 2 && ok; ++dj) {
        for (int di = -1; di <= 2 && ok; ++di) {
          const int row = g.row_at(base[0] + di, base[1] + dj,
                                   dim == 3 ? base[2] + dk : 0);
          if (row < 0) {
            ok = false;
            break;
          }
          const double w =
              wx[di + 1] * wy[dj + 1] * (dim == 3 ? wz[dk + 1] : 1.0);
          acc += w * values_[row];
        }
      }
    }
    if (ok) return acc;
  }

  // Multilinear cell with ghost extrapolation through the boundary value.
  auto corner_value = [&](int i, int j, int k) {
    const int row = g.row_at(i, j, k);
    if (row >= 0) return values_[row];
    if (!boundary_value_) {
      std::ostringstream os;
      os << "GridField::sample: point " << x
         << " needs an exterior corner and the field has no boundary value";
      throw CoverageError(os.str());
    }
    // Ghost from an interior neighbor along some axis, extrapolating
    // linearly through the boundary intersection; prefer the largest
    // offset (mildest extrapolation).
    const double gb = *boundary_value_;
    double best_offset = -1.0;
    double ghost = 0.0;
    const int di[6] = {-1, 1, 0, 0, 0, 0};
    const int dj[6] = {0, 0, -1, 1, 0, 0};
    const int dk[6] = {0, 0, 0, 0, -1, 1};
    const int count = dim == 3 ? 6 : 4;
    for (int d = 0; d < count; ++d) {
      const int ii = i + di[d], jj = j + dj[d], kk = k + dk[d];
      const int nrow = g.row_at(ii, jj, kk);
      if (nrow < 0) continue;
      // Offset from the interior node back toward (i, j, k).
      const int axis = d / 2;
      const int side = (d % 2 == 0) ? 1 : 0;  // direction from neighbor to us
      const Grid::Neighbor nb = g.neighbor(nrow, axis, side);
      if (nb.row >= 0) continue;  // inconsistent; skip
      if (nb.offset > best_offset) {
        best_offset = nb.offset;
        ghost = values_[nrow] + (gb - values_[nrow]) / nb.offset;
      }
    }
    if (best_offset < 0.0) {
      std::ostringstream os;
      os << "GridField::sample: point " << x
         << " touches an exterior corner with no interior neighbor";
      throw CoverageError(os.str());
    }
    return ghost;
  };

  double acc = 0.0;
  const int kz1 = dim == 3 ? 1 : 0;
  for (int dk = 0; dk <= kz1; ++dk) {
    for (int dj = 0; dj <= 1; ++dj) {
      for (int di = 0; di <= 1; ++di) {
        const double w = (di ? local[0] : 1.0 - local[0]) *
                         (dj ? local[1] : 1.0 - local[1]) *
                         (dim == 3 ? (dk ? local[2] : 1.0 - local[2]) : 1.0);
        if (w == 0.0) continue;
        acc += w * corner_value(base[0] + di, base[1] + dj,
                                dim == 3 ? base[2] + dk : 0);
      }
    }
  }
  return acc;
}

GridField pullback_field(const Isometry& iso, const GridField& source,
                         const std::shared_ptr<const Grid>& target) {
  Eigen::VectorXd out(target->interior_count());
  for (int row = 0; row < target->interior_count(); ++row) {
    try {
      out[row] = source.sample(iso.apply(target->point(row)));
    } catch (const CoverageError& err) {
      std::ostringstream os;
      os << "pullback_field: target node " << target->point(row)
         << " maps outside the source data: " << err.what();
      throw CoverageError(os.str());
    }
  }
  // The pulled-back field has no uniform Dirichlet value of its own.
  return GridField(target, std::move(out));
}

GridField pullback_field(const Isometry& iso, const GridField& source) {
  return pullback_field(iso, source, source.grid_ptr());
}

}  // namespace isotherm
