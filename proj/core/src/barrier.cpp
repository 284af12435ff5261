#include "isotherm/barrier.hpp"

#include <cmath>

namespace isotherm {

BarrierParams measure_barrier_params(const ImplicitDomain& domain,
                                     double epsilon, int angular_samples,
                                     int depth_samples) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ArgumentError("measure_barrier_params: epsilon must be in (0,1)");
  }
  const ModelSpace& space = domain.space();
  BarrierParams params;
  params.epsilon = epsilon;
  params.delta = 0.1 * domain.inradius();

  const BoundarySample rim = sample_boundary(domain, angular_samples);
  const double fd = space.flat() ? 1e-4 : 1e-4 * space.radius();

  double worst = 0.0;
  for (std::size_t i = 0; i < rim.size(); ++i) {
    for (int d = 1; d <= depth_samples; ++d) {
      // First-order placement at depth fraction d/(samples+1) of the collar;
      // only a sup estimate is needed.
      const double depth = params.delta * d / (depth_samples + 1);
      const Vec q = rim.points[i];
      const double factor = conformal_factor(space, q);
      const Vec x = q + (depth / factor) * normalized(rim.normals[i]);
      const double f0 = domain.signed_boundary_distance(x);
      if (f0 <= 0.0 || f0 >= params.delta) continue;
      double lap = 0.0;
      for (int a = 0; a < space.dim; ++a) {
        Vec e;
        e[a] = fd;
        lap += (domain.signed_boundary_distance(x + e) - 2.0 * f0 +
                domain.signed_boundary_distance(x - e)) /
               (fd * fd);
      }
      const double w = 0.5 * (1.0 + space.curvature * norm2(x));
      worst = std::max(worst, std::abs(w * w * lap));
    }
  }
  params.m_delta = worst;
  params.s_min =
      (1.0 + epsilon) / (epsilon * epsilon) * worst * worst;
  return params;
}

namespace {

BarrierReport run_check(std::span<const double> s_values,
                        const std::function<double(std::size_t, const Vec&)>& w,
                        const std::function<bool(std::size_t)>& usable,
                        const ImplicitDomain& domain,
                        const BarrierParams& params,
                        std::span<const Vec> probes, double slack) {
  if (params.s_min <
      (1.0 - 1e-9) * (1.0 + params.epsilon) /
          (params.epsilon * params.epsilon) * params.m_delta * params.m_delta) {
    throw PreconditionError(
        "barrier_check: s_min below the (1+eps)/eps^2 M_delta^2 threshold");
  }
  BarrierReport report;
  report.slack = slack;
  for (const Vec& probe : probes) {
    const double dist = dist_to_boundary(domain, probe);
    for (std::size_t j = 0; j < s_values.size(); ++j) {
      const double s = s_values[j];
      if (s < params.s_min || !usable(j)) continue;
      const double value = w(j, probe);
      const double lower =
          std::exp(-std::sqrt(s * (1.0 + params.epsilon)) * dist);
      const double upper =
          std::exp(-std::sqrt(s * (1.0 - params.epsilon)) * dist);
      ++report.checks;
      if (value < lower - slack || value > upper + slack) {
        report.violations.push_back({probe, s, value, lower, upper});
      }
    }
  }
  return report;
}

}  // namespace

BarrierReport barrier_check(const SLadder& ladder,
                            const ImplicitDomain& domain,
                            const BarrierParams& params,
                            std::span<const Vec> probes) {
  const double slack = 10.0 * ladder.h * ladder.h;
  return run_check(
      ladder.s_values,
      [&](std::size_t j, const Vec& p) { return ladder.fields[j].sample(p); },
      [&](std::size_t j) { return !ladder.clamped(j); }, domain, params,
      probes, slack);
}

BarrierReport barrier_check_values(
    std::span<const double> s_values,
    const std::function<double(double, const Vec&)>& w,
    const ImplicitDomain& domain, const BarrierParams& params,
    std::span<const Vec> probes, double slack) {
  return run_check(
      s_values,
      [&](std::size_t j, const Vec& p) { return w(s_values[j], p); },
      [](std::size_t) { return true; }, domain, params, probes, slack);
}

}  // namespace isotherm
