#include "isotherm/varadhan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace isotherm {

std::string VaradhanFit::to_json() const {
  nlohmann::json j;
  j["probe"] = {probe.x, probe.y, probe.z};
  j["s_values"] = s_values;
  j["estimates"] = estimates;
  j["extrapolated"] = limit;
  j["slope"] = slope;
  j["model_residual"] = fit_residual;
  return j.dump(2);
}

VaradhanFit varadhan_fit(std::span<const double> s_values,
                         std::span<const double> w_values, const Vec& probe,
                         double tail_tolerance) {
  if (s_values.size() != w_values.size()) {
    throw ArgumentError("varadhan_fit: size mismatch");
  }
  VaradhanFit fit;
  fit.probe = probe;
  for (std::size_t j = 0; j < s_values.size(); ++j) {
    if (!(w_values[j] > 0.0) || !std::isfinite(w_values[j])) continue;
    fit.s_values.push_back(s_values[j]);
    fit.estimates.push_back(-std::log(w_values[j]) / std::sqrt(s_values[j]));
  }
  const std::size_t m = fit.estimates.size();
  if (m < 3) {
    throw PreconditionError(
        "varadhan_fit: need at least 3 usable ladder entries");
  }

  // Tail monotonicity diagnostic over the fitted points: the estimates of a
  // resolved ladder settle monotonically at large s.
  const std::size_t fit_count = std::min<std::size_t>(4, m);
  const std::size_t first = m - fit_count;
  for (std::size_t j = first; j + 1 < m; ++j) {
    const double scale = std::max({std::abs(fit.estimates[j]),
                                   std::abs(fit.estimates[m - 1]), 1e-12});
    if (fit.estimates[j + 1] >
        fit.estimates[j] + tail_tolerance * scale) {
      std::ostringstream os;
      os << "varadhan_fit: estimate tail not monotone at s = "
         << fit.s_values[j + 1]
         << " (boundary layer under-resolved? sqrt(s)*h too large)";
      throw DiagnosticError(os.str());
    }
  }

  // Least squares on e = F + c / sqrt(s) over the fitted tail.
  double sw = 0.0, sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  for (std::size_t j = first; j < m; ++j) {
    const double x = 1.0 / std::sqrt(fit.s_values[j]);
    const double y = fit.estimates[j];
    sw += 1.0;
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  const double det = sw * sxx - sx * sx;
  fit.limit = (sxx * sy - sx * sxy) / det;
  fit.slope = (sw * sxy - sx * sy) / det;
  for (std::size_t j = first; j < m; ++j) {
    const double model =
        fit.limit + fit.slope / std::sqrt(fit.s_values[j]);
    fit.fit_residual =
        std::max(fit.fit_residual, std::abs(model - fit.estimates[j]));
  }
  return fit;
}

VaradhanFit varadhan_extract(const SLadder& ladder, const Vec& probe,
                             double tail_tolerance) {
  std::vector<double> s, w;
  for (std::size_t j = 0; j < ladder.s_values.size(); ++j) {
    if (ladder.clamped(j)) continue;
    s.push_back(ladder.s_values[j]);
    w.push_back(ladder.fields[j].sample(probe));
  }
  return varadhan_fit(s, w, probe, tail_tolerance);
}

}  // namespace isotherm
