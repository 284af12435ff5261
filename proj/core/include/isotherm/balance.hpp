#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <vector>

#include "isotherm/heat.hpp"

namespace isotherm {

// Spherical means U(t, r) = int_{S^{n-1}} v(t, exp_0(r theta)) dTheta and
// unit-direction first moments Q(t, r) = int theta v dTheta of a trace,
// taken about `center` (moved to the origin by the canonical isometry).
// Radii are geodesic; the matching coordinate radii are kept because the
// radial evolution identities are difference-checked on a uniform
// coordinate-radius grid.
struct MeanSeries {
  Vec center;
  int dim = 2;
  double curvature = 0.0;
  std::vector<double> radii;        // geodesic
  std::vector<double> coord_radii;  // coordinate
  std::vector<double> times;
  Eigen::MatrixXd mean;                       // times x radii
  std::array<Eigen::MatrixXd, 3> moment;      // per component
};

// Angular quadrature of the trace snapshots nearest to `times` on spheres of
// the given geodesic radii. All spheres must lie inside the trace's domain
// data (CoverageError otherwise).
MeanSeries mean_series(const HeatTrace& trace, const Vec& center,
                       std::span<const double> radii,
                       std::span<const double> times, int angular_nodes = 256);

// Max normalized residual of the radial evolution identity for the means,
//   4 r U_t = (k^2 r^5 + 2 k r^3 + r) U_rr + (n-1)(k^2 r^4 + 2 k r^2 + 1) U_r
// (r the coordinate radius), by central differences on the series grid.
// The normalization is the largest term magnitude, so a constant-in-(t,r)
// series gives exactly 0 and a non-solution stays bounded away from 0.
// Requires >= 5 uniform times and >= 5 uniform coordinate radii.
double mean_evolution_residual(const MeanSeries& series);

// Same for the first moments:
//   4 r^2 Q_t = (k^2 r^6 + 2 k r^4 + r^2) Q_rr
//             + (n-1)(k^2 r^5 + 2 k r^3 + r) Q_r - (n-1) Q.
double moment_evolution_residual(const MeanSeries& series);

enum class BalanceDirection {
  kCenterToMeans,    // v(t, x0) = 0  =>  means vanish
  kMeansToCenter,    // means vanish  =>  v(t, x0) = 0
  kGradientToMoments,
  kMomentsToGradient,
};

struct BalanceTolerances {
  double hypothesis = 5e-3;
  double conclusion = 5e-3;
};

struct BalanceReport {
  BalanceDirection direction;
  bool applicable = false;   // hypothesis met within tolerance
  bool holds = false;        // conclusion met within tolerance (when applicable)
  double center_sup = 0.0;   // max_t |v(t, x0)| / ||v||
  double gradient_sup = 0.0; // max_t |grad v(t, x0)| * h-scale / ||v||
  double means_sup = 0.0;    // max |int v dA| / (||v|| Area)
  double moments_sup = 0.0;
  double field_norm = 0.0;   // ||v|| over the sampled snapshots
  BalanceTolerances tolerances;
};

// Both directions of the balance equivalence on a caloric difference field.
// The trace must be (numerically) a solution of the evolution equation:
// a crude interior PDE-residual spot check guards the precondition
// (PreconditionError on failure).
BalanceReport balance_law_check(const HeatTrace& trace, const Vec& center,
                                std::span<const double> radii,
                                std::span<const double> times,
                                BalanceDirection direction,
                                const BalanceTolerances& tolerances = {},
                                int angular_nodes = 256);

}  // namespace isotherm
