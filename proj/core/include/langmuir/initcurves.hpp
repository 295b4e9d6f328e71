#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "langmuir/geometry.hpp"
#include "langmuir/kernel.hpp"
#include "langmuir/vec2.hpp"

namespace langmuir {

struct BolaParams {
  double eps = 0.2;
  double rho = 0.4;
};

struct CircleParams {
  double radius = 1.0;
  Vec2 center{0.0, 0.0};
};

struct EllipseParams {
  double a = 2.0;
  double b = 1.0;
};

struct FileParams {
  std::string path;
};

using CurveDescriptor = std::variant<BolaParams, CircleParams, EllipseParams, FileParams>;

/// Position, parameter derivative and geometric curvature at parameter u.
struct CurveFrame {
  Vec2 position;
  Vec2 derivative;  // d(gamma)/du
  double curvature = 0.0;
};

/// Smooth closed curve given by an analytic parameterization over [0,1),
/// traversed counter-clockwise.
class AnalyticCurve {
 public:
  /// Dumbbell: two circular lobes of radius rho joined by a straight neck of
  /// half-width eps, point-symmetric about the origin. Requires 0 < eps < rho.
  /// The four branch junctions are continuity-checked to 1e-12 at construction.
  static AnalyticCurve bola(double eps, double rho);
  static AnalyticCurve bola() { return bola(BolaParams{}.eps, BolaParams{}.rho); }

  static AnalyticCurve circle(double radius, Vec2 center = {});
  static AnalyticCurve ellipse(double a, double b);
  static AnalyticCurve make(const CurveDescriptor& d);  // analytic descriptors only

  /// Periodic in u (any real parameter is wrapped into [0,1)).
  Vec2 evaluate(double u) const;
  CurveFrame frame(double u) const;

  const CurveDescriptor& descriptor() const { return descriptor_; }

 private:
  explicit AnalyticCurve(CurveDescriptor d) : descriptor_(std::move(d)) {}
  CurveDescriptor descriptor_;
};

/// Polygon with vertices gamma((j+1/2)/n) at the midpoint parameter nodes.
/// Throws SelfIntersectingSample when the sampled polygon has non-positive
/// area or zero chord-arc constant.
PolygonalCurve sample(const AnalyticCurve& curve, int n);

/// Quadrature samples (position, outward normal, curvature, arc weight) at the
/// midpoint nodes, with analytic normals and curvatures.
std::vector<SmoothCurveSample> sample_smooth(const AnalyticCurve& curve, int n);

/// Reads the curve CSV format ("x,y" header; a trailing kappa column is
/// ignored). Input must be counter-clockwise; it is not auto-reversed.
PolygonalCurve load_curve_csv(const std::filesystem::path& path);

/// Builds the initial polygon for a descriptor: analytic shapes are sampled at
/// n midpoint nodes, file curves are loaded verbatim (n is ignored).
PolygonalCurve initial_polygon(const CurveDescriptor& d, int n);

/// Parses the CLI shorthand: "bola", "bola:eps,rho", "circle:R",
/// "circle:R,cx,cy", "ellipse:a,b", "file:path".
CurveDescriptor parse_descriptor(const std::string& text);

std::string descriptor_name(const CurveDescriptor& d);

}  // namespace langmuir
