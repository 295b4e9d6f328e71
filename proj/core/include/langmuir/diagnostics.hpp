#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <utility>

#include "langmuir/scheme.hpp"

namespace langmuir {

struct DiagnosticsRecord {
  int step = 0;
  double time = 0.0;
  double length = 0.0;
  double area = 0.0;
  double isoperimetric_ratio = 0.0;  // L^2 / (4 pi A), >= 1 up to O(n^-2)
  double min_edge = 0.0;
  double chord_arc = 0.0;
  double max_displacement = 0.0;
};

DiagnosticsRecord record(const SimulationState& state, const StepReport& report);

/// Least-squares slope of log(e) against log(h). Needs >= 2 samples with
/// h strictly decreasing and e > 0.
double estimated_order(std::span<const std::pair<double, double>> errors);

/// Least-squares slope of log(magnitude) against log(radius); -2 for dipole
/// far fields.
double decay_slope(std::span<const double> radii, std::span<const double> magnitudes);

/// Writes diagnostics.csv: fixed header, one row per record, 15 significant
/// digits, flushed per row.
class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::filesystem::path& path);
  void write(const DiagnosticsRecord& r);

 private:
  std::ofstream out_;
};

}  // namespace langmuir
