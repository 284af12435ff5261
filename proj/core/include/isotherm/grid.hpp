#pragma once

#include <memory>
#include <vector>

#include "isotherm/implicit_domain.hpp"

namespace isotherm {

// Uniform Cartesian lattice over the domain's bounding box with an interior
// mask and Shortley-Weller boundary data: for every interior node and every
// axis direction whose lattice neighbor leaves the domain, the fractional
// distance (0, 1] along that axis to the boundary intersection.
//
// Construction guarantees: every interior node has phi < 0, every offset
// lies in (0, 1], and the interior is edge connected (ResolutionError
// otherwise).
class Grid {
 public:
  struct Neighbor {
    int row = -1;          // interior row index, or -1 when the boundary cuts
    double offset = 1.0;   // fraction of h to the cut when row < 0
  };

  static std::shared_ptr<const Grid> build(const ImplicitDomain& domain,
                                           double spacing);

  const ModelSpace& space() const { return domain_.space(); }
  const ImplicitDomain& domain() const { return domain_; }
  double spacing() const { return h_; }
  int interior_count() const { return static_cast<int>(points_.size()); }

  const Vec& point(int row) const { return points_[row]; }
  // side 0 = negative axis direction, side 1 = positive.
  const Neighbor& neighbor(int row, int axis, int side) const {
    return neighbors_[row][2 * axis + side];
  }

  // Row of the interior node nearest to x with all lattice neighbors
  // interior, or -1. Used by probes that need a clean stencil.
  int nearest_deep_row(const Vec& x) const;

  // Lattice geometry (used by interpolation).
  const Vec& origin() const { return origin_; }
  int extent(int axis) const { return extent_[axis]; }
  // Row index of lattice node (i, j, k), or -1 if not interior.
  int row_at(int i, int j, int k) const;

 private:
  Grid(const ImplicitDomain& domain, double h) : domain_(domain), h_(h) {}

  ImplicitDomain domain_;
  double h_;
  Vec origin_;
  int extent_[3] = {1, 1, 1};
  std::vector<int> row_of_node_;              // lattice -> row or -1
  std::vector<Vec> points_;                   // row -> coordinates
  std::vector<std::array<Neighbor, 6>> neighbors_;
};

}  // namespace isotherm
