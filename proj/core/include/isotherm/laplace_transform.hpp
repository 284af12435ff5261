#pragma once

#include <string>
#include <vector>

#include "isotherm/heat.hpp"

namespace isotherm {

enum class TransformMode { kHeat, kWave };

struct TransformResult {
  GridField field;
  std::vector<std::string> warnings;
};

// Time Laplace transforms bridging the evolution problems to the elliptic
// family:
//   heat:  W(s, x) = s       int_0^inf u(t, x) e^{-s t}       dt
//   wave:  V(s, x) = sqrt(s) int_0^inf v(t, x) e^{-sqrt(s) t} dt
// computed by the trapezoid rule over the stored snapshot times. Heat mode
// appends the analytic tail u(T) e^{-s T} of the monotone limit u -> 1; a
// truncation warning is recorded when s*T < 5 (sqrt(s)*T for wave mode).
// Wave mode prefers a streaming transform accumulated by wave_solve when the
// trace carries one for this s.
TransformResult laplace_transform(const HeatTrace& trace, double s,
                                  TransformMode mode);

}  // namespace isotherm
