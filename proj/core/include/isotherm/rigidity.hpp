#pragma once

#include <span>
#include <string>
#include <vector>

#include "isotherm/curvature.hpp"
#include "isotherm/heat.hpp"
#include "isotherm/ladder.hpp"
#include "isotherm/varadhan.hpp"

namespace isotherm {

// Time invariance of the temperature on the inner surface: for each stored
// time, the weighted mean a(t) over the sample and the worst deviation from
// it; the score is max_t deviation / max(a(t), 1e-12).
struct StationarityResult {
  double score = 0.0;
  std::vector<double> times;
  std::vector<double> means;       // a(t)
  std::vector<double> deviations;  // max |u - a(t)| over the sample
  bool degenerate = false;         // fewer than 2 sample points
};

StationarityResult stationarity_check(const HeatTrace& trace,
                                      const BoundarySample& inner);

// Distance extraction from the boundary means A(s) = mean of W(s, .) over
// the inner sample, by the same extrapolation model as varadhan_fit. When
// the inner surface is a stationary isothermic surface this recovers the
// (constant) distance от the inner surface to the outer boundary.
struct RadiusExtraction {
  double radius = 0.0;
  double slope = 0.0;
  double fit_residual = 0.0;
  std::vector<double> s_values;
  std::vector<double> a_values;
  bool spread_warning = false;  // W spread over the sample exceeded 10%
  double max_spread = 0.0;      // worst relative spread across s
};

RadiusExtraction extract_inner_radius(const SLadder& ladder,
                                      const BoundarySample& inner);

// Per-sample products prod_j (sphere_curvature(R) - lambda_j) over boundary
// points; constant exactly when the boundary is a geodesic sphere.
// HypothesisError (naming the point) if any factor is <= 0.
std::vector<double> curvature_products(const ModelSpace& space,
                                       const ImplicitDomain& domain, double R,
                                       const BoundarySample& boundary);

struct RigidityThresholds {
  double stationarity = 5e-3;
  double product_spread = 5e-2;
  double radius_rel = 0.05;
};

enum class RigidityVerdict {
  kConsistentWithGeodesicBall,
  kRejected,
  kInconclusive,
};

std::string to_string(RigidityVerdict verdict);

struct RigidityReport {
  int schema_version = 1;
  double stationarity_score = 0.0;
  double extracted_radius = 0.0;
  double reference_radius = 0.0;  // measured dist(inner surface, boundary)
  double radius_rel_error = 0.0;
  std::vector<double> products;
  double product_spread = 0.0;  // (max - min) / mean
  RigidityThresholds thresholds;
  RigidityVerdict verdict = RigidityVerdict::kInconclusive;
  std::vector<double> stationarity_times;
  std::vector<double> stationarity_means;

  std::string to_json() const;
};

// Aggregates the three analyses: consistent when all pass their thresholds,
// rejected when any fails with a 2x margin, inconclusive otherwise.
RigidityReport rigidity_verdict(const StationarityResult& stationarity,
                                const RadiusExtraction& extraction,
                                std::span<const double> products,
                                double reference_radius,
                                const RigidityThresholds& thresholds = {});

}  // namespace isotherm
