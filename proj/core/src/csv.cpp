#include "isotherm/csv.hpp"

#include <cstdio>

namespace isotherm {

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_field_csv(std::ostream& os, const GridField& field,
                     const std::vector<std::string>& metadata) {
  for (const std::string& line : metadata) os << "# " << line << "\n";
  const Grid& grid = field.grid();
  const int dim = grid.space().dim;
  os << (dim == 3 ? "x1,x2,x3,value" : "x1,x2,value") << "\n";
  for (int row = 0; row < grid.interior_count(); ++row) {
    const Vec& p = grid.point(row);
    os << format_full(p.x) << "," << format_full(p.y);
    if (dim == 3) os << "," << format_full(p.z);
    os << "," << format_full(field[row]) << "\n";
  }
}

void write_mean_series_csv(std::ostream& os, const MeanSeries& series,
                           const std::vector<std::string>& metadata) {
  for (const std::string& line : metadata) os << "# " << line << "\n";
  os << "t,r,U";
  for (int c = 0; c < series.dim; ++c) os << ",Q_" << (c + 1);
  os << "\n";
  for (std::size_t it = 0; it < series.times.size(); ++it) {
    for (std::size_t ir = 0; ir < series.radii.size(); ++ir) {
      os << format_full(series.times[it]) << ","
         << format_full(series.radii[ir]) << ","
         << format_full(series.mean(it, ir));
      for (int c = 0; c < series.dim; ++c) {
        os << "," << format_full(series.moment[c](it, ir));
      }
      os << "\n";
    }
  }
}

}  // namespace isotherm
