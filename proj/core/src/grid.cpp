#include "isotherm/grid.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <sstream>

namespace isotherm {

namespace {

// Zero of phi along the segment x -> x + t*step_vec, t in (0, 1], given
// phi(x) < 0 <= phi(x + step_vec). Bisection to 1e-12 of the step.
double crossing_fraction(const ImplicitDomain& domain, const Vec& x,
                         const Vec& step) {
  double lo = 0.0, hi = 1.0;
  double plo = domain.phi(x);
  double phi_hi = domain.phi(x + step);
  (void)plo;
  (void)phi_hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (domain.phi(x + mid * step) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::shared_ptr<const Grid> Grid::build(const ImplicitDomain& domain,
                                        double spacing) {
  if (spacing <= 0.0) throw ArgumentError("Grid: spacing must be positive");
  struct Access : Grid {
    Access(const ImplicitDomain& d, double h) : Grid(d, h) {}
  };
  auto grid = std::make_shared<Access>(domain, spacing);

  const int dim = domain.space().dim;
  const Box& box = domain.bbox();
  grid->origin_ = box.lo;
  for (int a = 0; a < dim; ++a) {
    grid->extent_[a] =
        static_cast<int>(std::ceil((box.hi[a] - box.lo[a]) / spacing)) + 1;
    if (grid->extent_[a] < 3) {
      throw ResolutionError("Grid: bounding box too small for spacing");
    }
  }

  const int nx = grid->extent_[0], ny = grid->extent_[1],
            nz = grid->extent_[2];
  auto node_id = [&](int i, int j, int k) { return (k * ny + j) * nx + i; };
  auto node_point = [&](int i, int j, int k) {
    return Vec{grid->origin_.x + i * spacing, grid->origin_.y + j * spacing,
               grid->origin_.z + k * spacing};
  };

  grid->row_of_node_.assign(static_cast<std::size_t>(nx) * ny * nz, -1);
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const Vec p = node_point(i, j, k);
        if (domain.phi(p) < 0.0) {
          grid->row_of_node_[node_id(i, j, k)] =
              static_cast<int>(grid->points_.size());
          grid->points_.push_back(p);
        }
      }
    }
  }
  if (grid->points_.empty()) {
    throw ResolutionError("Grid: no interior nodes at this spacing");
  }

  // Neighbor table with boundary offsets.
  grid->neighbors_.resize(grid->points_.size());
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const int row = grid->row_of_node_[node_id(i, j, k)];
        if (row < 0) continue;
        const Vec p = grid->points_[row];
        const int idx[3] = {i, j, k};
        const int maxed[3] = {nx - 1, ny - 1, nz - 1};
        for (int a = 0; a < dim; ++a) {
          for (int side = 0; side < 2; ++side) {
            const int dir = side == 0 ? -1 : 1;
            Neighbor nb;
            int ni = idx[0], nj = idx[1], nk = idx[2];
            (a == 0 ? ni : a == 1 ? nj : nk) += dir;
            const bool in_lattice = (a == 0 ? ni >= 0 && ni <= maxed[0]
                                     : a == 1 ? nj >= 0 && nj <= maxed[1]
                                              : nk >= 0 && nk <= maxed[2]);
            const int nrow =
                in_lattice ? grid->row_of_node_[node_id(ni, nj, nk)] : -1;
            if (nrow >= 0) {
              nb.row = nrow;
            } else {
              if (!in_lattice) {
                throw ResolutionError(
                    "Grid: interior touches the bounding box; enlarge the "
                    "box padding");
              }
              Vec step;
              step[a] = dir * spacing;
              nb.row = -1;
              nb.offset = crossing_fraction(domain, p, step);
              if (nb.offset <= 0.0) nb.offset = 1e-12;
            }
            grid->neighbors_[row][2 * a + side] = nb;
          }
        }
      }
    }
  }

  // Edge connectivity of the interior.
  {
    std::vector<char> seen(grid->points_.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!queue.empty()) {
      const int row = queue.front();
      queue.pop_front();
      for (int a = 0; a < dim; ++a) {
        for (int side = 0; side < 2; ++side) {
          const int other = grid->neighbors_[row][2 * a + side].row;
          if (other >= 0 && !seen[other]) {
            seen[other] = 1;
            ++visited;
            queue.push_back(other);
          }
        }
      }
    }
    if (visited != grid->points_.size()) {
      std::ostringstream os;
      os << "Grid: interior is disconnected (" << visited << " of "
         << grid->points_.size() << " nodes reachable); refine the spacing";
      throw ResolutionError(os.str());
    }
  }

  return grid;
}

int Grid::row_at(int i, int j, int k) const {
  if (i < 0 || i >= extent_[0] || j < 0 || j >= extent_[1] || k < 0 ||
      k >= extent_[2]) {
    return -1;
  }
  return row_of_node_[(static_cast<std::size_t>(k) * extent_[1] + j) *
                          extent_[0] +
                      i];
}

int Grid::nearest_deep_row(const Vec& x) const {
  const int dim = domain_.space().dim;
  const int ci = static_cast<int>(std::lround((x.x - origin_.x) / h_));
  const int cj = static_cast<int>(std::lround((x.y - origin_.y) / h_));
  const int ck = dim == 3
                     ? static_cast<int>(std::lround((x.z - origin_.z) / h_))
                     : 0;
  for (int radius = 0; radius < 8; ++radius) {
    for (int dk = -radius; dk <= radius; ++dk) {
      if (dim == 2 && dk != 0) continue;
      for (int dj = -radius; dj <= radius; ++dj) {
        for (int di = -radius; di <= radius; ++di) {
          const int row = row_at(ci + di, cj + dj, ck + dk);
          if (row < 0) continue;
          bool deep = true;
          for (int a = 0; a < dim && deep; ++a) {
            for (int side = 0; side < 2; ++side) {
              if (neighbors_[row][2 * a + side].row < 0) deep = false;
            }
          }
          if (deep) return row;
        }
      }
    }
  }
  return -1;
}

}  // namespace isotherm
