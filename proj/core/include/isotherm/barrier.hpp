#pragma once

#include <functional>
#include <span>
#include <vector>

#include "isotherm/implicit_domain.hpp"
#include "isotherm/ladder.hpp"

namespace isotherm {

// Parameters of the exponential sandwich
//   exp(-sqrt(s(1+eps)) F(x)) <= W(s, x) <= exp(-sqrt(s(1-eps)) F(x)),
// asserted for s >= s_min. The sandwich threshold requires
// s_min >= (1+eps)/eps^2 * M_delta^2 with M_delta the sup of |L F| over the
// boundary collar {F < delta}.
struct BarrierParams {
  double epsilon = 0.5;  // in (0, 1)
  double delta = 0.0;    // collar width (geodesic)
  double m_delta = 0.0;  // measured sup of |L F| on the collar
  double s_min = 0.0;
};

// Measures M_delta by central differences of the boundary distance over the
// collar of width delta = 0.1 * inradius, and fills in the threshold
// s_min = (1+eps)/eps^2 * M_delta^2.
BarrierParams measure_barrier_params(const ImplicitDomain& domain,
                                     double epsilon, int angular_samples = 64,
                                     int depth_samples = 8);

struct BarrierViolation {
  Vec probe;
  double s;
  double value;
  double lower;
  double upper;
};

struct BarrierReport {
  std::vector<BarrierViolation> violations;
  int checks = 0;
  double slack = 0.0;

  bool passed() const { return violations.empty(); }
};

// Asserts the sandwich at each probe for every unclamped ladder entry with
// s >= params.s_min, with additive slack 10 h^2 for the discretization.
BarrierReport barrier_check(const SLadder& ladder,
                            const ImplicitDomain& domain,
                            const BarrierParams& params,
                            std::span<const Vec> probes);

// Oracle-path variant: per-probe values from a closed form or collocation
// profile, checked without discretization slack.
BarrierReport barrier_check_values(
    std::span<const double> s_values,
    const std::function<double(double s, const Vec& probe)>& w,
    const ImplicitDomain& domain, const BarrierParams& params,
    std::span<const Vec> probes, double slack = 1e-12);

}  // namespace isotherm
