#include "isotherm/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace isotherm {

StationarityResult stationarity_check(const HeatTrace& trace,
                                      const BoundarySample& inner) {
  if (inner.size() == 0) {
    throw ArgumentError("stationarity_check: empty inner sample");
  }
  StationarityResult result;
  result.degenerate = inner.size() < 2;

  const double total_weight =
      std::accumulate(inner.weights.begin(), inner.weights.end(), 0.0);
  for (std::size_t it = 0; it < trace.times.size(); ++it) {
    const GridField field = trace.field_at(it);
    double mean = 0.0;
    std::vector<double> vals(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
      vals[i] = field.sample(inner.points[i]);
      mean += inner.weights[i] * vals[i];
    }
    mean /= total_weight;
    double dev = 0.0;
    for (double v : vals) dev = std::max(dev, std::abs(v - mean));
    result.times.push_back(trace.times[it]);
    result.means.push_back(mean);
    result.deviations.push_back(dev);
    if (!result.degenerate) {
      result.score =
          std::max(result.score, dev / std::max(mean, 1e-12));
    }
  }
  return result;
}

RadiusExtraction extract_inner_radius(const SLadder& ladder,
                                      const BoundarySample& inner) {
  if (inner.size() == 0) {
    throw ArgumentError("extract_inner_radius: empty inner sample");
  }
  RadiusExtraction out;
  const double total_weight =
      std::accumulate(inner.weights.begin(), inner.weights.end(), 0.0);
  std::vector<double> s_used, a_used;
  for (std::size_t j = 0; j < ladder.s_values.size(); ++j) {
    if (ladder.clamped(j)) continue;
    double mean = 0.0, lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const double w = ladder.fields[j].sample(inner.points[i]);
      mean += inner.weights[i] * w;
      if (i == 0) {
        lo = hi = w;
      } else {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
    }
    mean /= total_weight;
    if (mean <= 0.0) continue;
    const double spread = (hi - lo) / mean;
    out.max_spread = std::max(out.max_spread, spread);
    if (spread > 0.10) out.spread_warning = true;
    s_used.push_back(ladder.s_values[j]);
    a_used.push_back(mean);
  }
  const VaradhanFit fit = varadhan_fit(s_used, a_used, Vec{});
  out.radius = fit.limit;
  out.slope = fit.slope;
  out.fit_residual = fit.fit_residual;
  out.s_values = std::move(s_used);
  out.a_values = std::move(a_used);
  return out;
}

std::vector<double> curvature_products(const ModelSpace& space,
                                       const ImplicitDomain& domain, double R,
                                       const BoundarySample& boundary) {
  if (!(R > 0.0) || R >= domain.inradius()) {
    throw ArgumentError("curvature_products: R must lie in (0, inradius)");
  }
  const double tau = sphere_curvature(space, R);
  std::vector<double> products;
  products.reserve(boundary.size());
  for (const Vec& p : boundary.points) {
    const CurvatureSpectrum spectrum = principal_curvatures(space, domain, p);
    double prod = 1.0;
    for (double lambda : spectrum.values) {
      const double factor = tau - lambda;
      if (factor <= 0.0) {
        std::ostringstream os;
        os << "curvature_products: lambda >= sphere curvature at " << p
           << " (" << lambda << " >= " << tau << ")";
        throw HypothesisError(os.str());
      }
      prod *= factor;
    }
    products.push_back(prod);
  }
  return products;
}

std::string to_string(RigidityVerdict verdict) {
  switch (verdict) {
    case RigidityVerdict::kConsistentWithGeodesicBall:
      return "consistent-with-geodesic-ball";
    case RigidityVerdict::kRejected:
      return "rejected";
    case RigidityVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

RigidityReport rigidity_verdict(const StationarityResult& stationarity,
                                const RadiusExtraction& extraction,
                                std::span<const double> products,
                                double reference_radius,
                                const RigidityThresholds& thresholds) {
  if (products.empty()) {
    throw ArgumentError("rigidity_verdict: no curvature products");
  }
  if (stationarity.times.empty()) {
    throw ArgumentError("rigidity_verdict: missing stationarity analysis");
  }
  RigidityReport report;
  report.thresholds = thresholds;
  report.stationarity_score = stationarity.score;
  report.stationarity_times = stationarity.times;
  report.stationarity_means = stationarity.means;
  report.extracted_radius = extraction.radius;
  report.reference_radius = reference_radius;
  report.radius_rel_error =
      std::abs(extraction.radius - reference_radius) /
      std::max(reference_radius, 1e-12);
  report.products.assign(products.begin(), products.end());

  const auto [lo_it, hi_it] =
      std::minmax_element(products.begin(), products.end());
  const double mean =
      std::accumulate(products.begin(), products.end(), 0.0) / products.size();
  report.product_spread = (*hi_it - *lo_it) / std::max(mean, 1e-300);

  const bool s_ok = report.stationarity_score < thresholds.stationarity;
  const bool p_ok = report.product_spread < thresholds.product_spread;
  const bool r_ok = report.radius_rel_error < thresholds.radius_rel;
  const bool s_far = report.stationarity_score >= 2.0 * thresholds.stationarity;
  const bool p_far = report.product_spread >= 2.0 * thresholds.product_spread;
  const bool r_far = report.radius_rel_error >= 2.0 * thresholds.radius_rel;

  if (s_ok && p_ok && r_ok) {
    report.verdict = RigidityVerdict::kConsistentWithGeodesicBall;
  } else if (s_far || p_far || r_far) {
    report.verdict = RigidityVerdict::kRejected;
  } else {
    report.verdict = RigidityVerdict::kInconclusive;
  }
  return report;
}

std::string RigidityReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["stationarity"] = {{"score", stationarity_score},
                       {"times", stationarity_times},
                       {"means", stationarity_means}};
  j["radius"] = {{"extracted", extracted_radius},
                 {"reference", reference_radius},
                 {"relative_error", radius_rel_error}};
  j["curvature_products"] = {{"values", products},
                             {"relative_spread", product_spread}};
  j["thresholds"] = {{"stationarity", thresholds.stationarity},
                     {"product_spread", thresholds.product_spread},
                     {"radius_rel", thresholds.radius_rel}};
  j["verdict"] = to_string(verdict);
  return j.dump(2);
}

}  // namespace isotherm
