#include "isotherm/laplace_transform.hpp"

#include <cmath>
#include <sstream>

namespace isotherm {

TransformResult laplace_transform(const HeatTrace& trace, double s,
                                  TransformMode mode) {
  if (s <= 0.0) throw ArgumentError("laplace_transform: s must be positive");
  if (!trace.grid) throw ArgumentError("laplace_transform: empty trace");

  TransformResult result;

  if (mode == TransformMode::kWave) {
    for (const auto& [key, acc] : trace.wave_transforms) {
      if (std::abs(key - s) <= 1e-12 * (1.0 + s)) {
        if (std::sqrt(s) * trace.wave_horizon < 5.0) {
          std::ostringstream os;
          os << "sqrt(s)*T = " << std::sqrt(s) * trace.wave_horizon
             << " < 5: transform truncation may dominate";
          result.warnings.push_back(os.str());
        }
        // Boundary value of the truncated transform of the constant 1.
        const double vb = 1.0 - std::exp(-std::sqrt(s) * trace.wave_horizon);
        result.field = GridField(trace.grid, acc, vb);
        return result;
      }
    }
  }

  if (trace.fields.empty()) {
    throw ArgumentError("laplace_transform: trace has no stored fields");
  }
  const int n = trace.grid->interior_count();
  const double rate = mode == TransformMode::kHeat ? s : std::sqrt(s);
  const double horizon = trace.times.back();
  if (rate * horizon < 5.0) {
    std::ostringstream os;
    os << (mode == TransformMode::kHeat ? "s*T = " : "sqrt(s)*T = ")
       << rate * horizon << " < 5: transform truncation may dominate";
    result.warnings.push_back(os.str());
  }

  Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
  // Leading interval [0, t_0] with the zero initial data at t = 0.
  {
    const double t1 = trace.times.front();
    acc += (0.5 * t1 * rate * std::exp(-rate * t1)) * trace.fields.front();
  }
  for (std::size_t i = 0; i + 1 < trace.times.size(); ++i) {
    const double t0 = trace.times[i];
    const double t1 = trace.times[i + 1];
    const double w = 0.5 * (t1 - t0) * rate;
    acc += (w * std::exp(-rate * t0)) * trace.fields[i];
    acc += (w * std::exp(-rate * t1)) * trace.fields[i + 1];
  }

  double boundary = 1.0 - std::exp(-rate * horizon);
  if (mode == TransformMode::kHeat) {
    // Analytic tail from the monotone limit u -> 1 past the horizon.
    acc += std::exp(-s * horizon) * trace.fields.back();
    boundary = 1.0;
  }
  result.field = GridField(trace.grid, std::move(acc), boundary);
  return result;
}

}  // namespace isotherm
