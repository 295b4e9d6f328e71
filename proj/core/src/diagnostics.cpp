#include "langmuir/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "langmuir/errors.hpp"

namespace langmuir {

DiagnosticsRecord record(const SimulationState& state, const StepReport& report) {
  const double length = total_length(state.curve);
  const double area = enclosed_area(state.curve);
  return {state.step,
          state.time,
          length,
          area,
          length * length / (4.0 * std::numbers::pi * area),
          min_edge_length(state.curve),
          chord_arc_constant(state.curve),
          report.max_displacement};
}

namespace {

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n < 2) throw InsufficientSamples("slope fit needs at least 2 samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw InvalidParameters("slope fit requires positive samples");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InvalidParameters("slope fit: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

double estimated_order(std::span<const std::pair<double, double>> errors) {
  if (errors.size() < 2) {
    throw InsufficientSamples("estimated_order needs at least 2 (h, e) samples");
  }
  std::vector<double> h(errors.size());
  std::vector<double> e(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    h[i] = errors[i].first;
    e[i] = errors[i].second;
    if (i > 0 && !(h[i] < h[i - 1])) {
      throw InvalidParameters("estimated_order: h must be strictly decreasing");
    }
  }
  return loglog_slope(h, e);
}

double decay_slope(std::span<const double> radii, std::span<const double> magnitudes) {
  if (radii.size() != magnitudes.size()) {
    throw InvalidParameters("decay_slope: length mismatch");
  }
  if (radii.size() < 2) throw InsufficientSamples("decay_slope needs >= 2 samples");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) {
      throw InvalidParameters("decay_slope: radii must be increasing");
    }
  }
  return loglog_slope(radii, magnitudes);
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw Error("cannot open " + path.string() + " for writing");
  out_ << "step,time,length,area,isoperimetric_ratio,min_edge,chord_arc,max_displacement\n";
  out_.flush();
}

void DiagnosticsWriter::write(const DiagnosticsRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n",
                r.step, r.time, r.length, r.area, r.isoperimetric_ratio, r.min_edge,
                r.chord_arc, r.max_displacement);
  out_ << buf;
  out_.flush();
  if (!out_) throw Error("diagnostics write failed");
}

}  // namespace langmuir
