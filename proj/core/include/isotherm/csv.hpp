#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isotherm/balance.hpp"
#include "isotherm/grid_field.hpp"

namespace isotherm {

// Field snapshot as CSV: '#'-prefixed metadata lines, a header row
// x1,x2[,x3],value, one interior node per line, values in full round-trip
// precision.
void write_field_csv(std::ostream& os, const GridField& field,
                     const std::vector<std::string>& metadata = {});

// Mean series as CSV with columns t,r,U,Q_1..Q_n (same metadata convention).
void write_mean_series_csv(std::ostream& os, const MeanSeries& series,
                           const std::vector<std::string>& metadata = {});

// Full-precision decimal formatting used by every emitter ("%.17g").
std::string format_full(double value);

}  // namespace isotherm
