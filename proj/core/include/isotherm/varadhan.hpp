#pragma once

#include <span>
#include <string>
#include <vector>

#include "isotherm/ladder.hpp"

namespace isotherm {

// Distance extraction from the large-s family: estimates
//   e_j = -log W(s_j, x) / sqrt(s_j)
// extrapolated against the model e = F + c/sqrt(s). The model is exact for
// the half space and matches ball oracles empirically; tolerances downstream
// are sized for it.
struct VaradhanFit {
  Vec probe;
  std::vector<double> s_values;
  std::vector<double> estimates;
  double limit = 0.0;         // extrapolated F
  double slope = 0.0;         // fitted c
  double fit_residual = 0.0;  // max |model - estimate| over fitted points
  std::string to_json() const;
};

// Fit from raw per-probe values (oracle ladders and boundary means reuse
// this path). Requires >= 3 positive entries; a non-monotone estimate tail
// beyond `tail_tolerance` (relative) raises DiagnosticError, pointing at an
// under-resolved boundary layer.
VaradhanFit varadhan_fit(std::span<const double> s_values,
                         std::span<const double> w_values, const Vec& probe,
                         double tail_tolerance = 0.05);

// Extraction at a strictly interior probe of a grid ladder; clamped ladder
// entries are excluded.
VaradhanFit varadhan_extract(const SLadder& ladder, const Vec& probe,
                             double tail_tolerance = 0.05);

}  // namespace isotherm
