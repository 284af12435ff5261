#include "isotherm/ladder.hpp"

#include <algorithm>
#include <future>

#include "isotherm/conformal_operator.hpp"

namespace isotherm {

std::vector<double> geometric_ladder(double s0, double factor, int count) {
  if (s0 <= 0.0 || factor <= 1.0 || count < 1) {
    throw ArgumentError("geometric_ladder: need s0 > 0, factor > 1, count >= 1");
  }
  std::vector<double> s(count);
  s[0] = s0;
  for (int j = 1; j < count; ++j) s[j] = s[j - 1] * factor;
  return s;
}

SLadder build_ladder(const std::shared_ptr<const Grid>& grid,
                     std::vector<double> s_values,
                     const LadderOptions& options) {
  std::sort(s_values.begin(), s_values.end());
  const ConformalOperator op = assemble_conformal_operator(grid);

  SLadder ladder;
  ladder.grid = grid;
  ladder.s_values = s_values;
  ladder.h = grid->spacing();
  ladder.fields.resize(s_values.size());
  ladder.clamp_counts.assign(s_values.size(), 0);

  const int threads = std::max(1, options.threads);
  std::size_t next = 0;
  while (next < s_values.size()) {
    const std::size_t batch =
        std::min<std::size_t>(threads, s_values.size() - next);
    std::vector<std::future<EllipticResult>> running;
    for (std::size_t b = 0; b < batch; ++b) {
      const double s = s_values[next + b];
      running.push_back(std::async(
          batch > 1 ? std::launch::async : std::launch::deferred,
          [&op, s, &options] { return elliptic_solve(op, s, options.elliptic); }));
    }
    for (std::size_t b = 0; b < batch; ++b) {
      EllipticResult res = running[b].get();
      ladder.fields[next + b] = std::move(res.field);
      ladder.clamp_counts[next + b] = res.clamped;
    }
    next += batch;
  }
  return ladder;
}

}  // namespace isotherm
