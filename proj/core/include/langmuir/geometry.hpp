#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "langmuir/vec2.hpp"

namespace langmuir {

/// Closed polygonal curve: vertices v_0..v_{n-1} with periodic indexing and a
/// matching set of parameter nodes in [0,1). Edge j is the segment entering
/// vertex j, i.e. from v_{j-1} to v_j (indices mod n).
///
/// Construction validates the curve invariants: n >= 3, every edge has
/// strictly positive length (DegenerateEdge) and the orientation is
/// counter-clockwise, signed area > 0 (ValidationError). Clockwise input is
/// rejected rather than reversed; the outward-normal sign is meaningful.
class PolygonalCurve {
 public:
  /// Uses the default midpoint parameter nodes (j + 1/2)/n.
  explicit PolygonalCurve(std::vector<Vec2> vertices);
  PolygonalCurve(std::vector<Vec2> vertices, std::vector<double> nodes);

  int size() const { return static_cast<int>(vertices_.size()); }
  std::span<const Vec2> vertices() const { return vertices_; }
  std::span<const double> nodes() const { return nodes_; }

  /// Vertex with periodic wraparound; j may be any int.
  const Vec2& vertex(int j) const {
    const int n = size();
    return vertices_[static_cast<std::size_t>(((j % n) + n) % n)];
  }

 private:
  std::vector<Vec2> vertices_;
  std::vector<double> nodes_;
};

/// Midpoint parameter nodes (j + 1/2)/n, j = 0..n-1.
std::vector<double> midpoint_nodes(int n);

/// Shoelace area of an arbitrary vertex loop (signed; CCW positive).
double signed_area(std::span<const Vec2> vertices);

/// r[j] = |v_j - v_{j-1}|, the length of the edge entering vertex j.
std::vector<double> edge_lengths(const PolygonalCurve& c);

double min_edge_length(const PolygonalCurve& c);

/// Unit outward normal of edge j (the edge entering vertex j).
std::vector<Vec2> edge_normals(const PolygonalCurve& c);

/// rotate_quarter((v_{j+1} - v_{j-1})/2). Not unit length: its magnitude is
/// the mass-lumped vertex weight.
Vec2 vertex_weighted_normal(const PolygonalCurve& c, int j);
std::vector<Vec2> vertex_weighted_normals(const PolygonalCurve& c);

double total_length(const PolygonalCurve& c);

/// Shoelace area of the curve (positive, since curves are CCW).
double enclosed_area(const PolygonalCurve& c);

/// min over vertex pairs i != j of |v_i - v_j| / d(x_i, x_j) where d is the
/// wraparound distance on the unit-length parameter circle. Zero only when
/// two vertices coincide. O(n^2).
double chord_arc_constant(const PolygonalCurve& c);
double chord_arc_constant(const PolygonalCurve& c, std::span<const double> nodes);

/// Curve CSV format: header "x,y", one vertex per row, implicit closure,
/// 17 significant digits. With a kappa vector the header is "x,y,kappa".
void write_curve_csv(std::ostream& out, const PolygonalCurve& c,
                     std::span<const double> kappa = {});
void write_curve_csv(const std::filesystem::path& path, const PolygonalCurve& c,
                     std::span<const double> kappa = {});

}  // namespace langmuir
