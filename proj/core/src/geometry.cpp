#include "langmuir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "langmuir/errors.hpp"

namespace langmuir {

namespace {

void validate(std::span<const Vec2> vertices, std::span<const double> nodes) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) {
    throw ValidationError("polygonal curve needs at least 3 vertices, got " +
                          std::to_string(n));
  }
  for (const Vec2& v : vertices) {
    if (!finite(v)) throw ValidationError("non-finite vertex coordinate");
  }
  for (int j = 0; j < n; ++j) {
    const Vec2 prev = vertices[static_cast<std::size_t>((j + n - 1) % n)];
    if (norm_sq(vertices[static_cast<std::size_t>(j)] - prev) == 0.0) {
      throw DegenerateEdge("zero-length edge entering vertex " + std::to_string(j));
    }
  }
  if (signed_area(vertices) <= 0.0) {
    throw ValidationError("curve orientation is not counter-clockwise (signed area <= 0)");
  }
  if (nodes.size() != vertices.size()) {
    throw ValidationError("parameter node count does not match vertex count");
  }
  for (int j = 0; j < n; ++j) {
    const double x = nodes[static_cast<std::size_t>(j)];
    if (!(x >= 0.0 && x < 1.0)) {
      throw ValidationError("parameter node outside [0,1)");
    }
    if (j > 0 && !(x > nodes[static_cast<std::size_t>(j - 1)])) {
      throw ValidationError("parameter nodes not strictly increasing");
    }
  }
}

}  // namespace

std::vector<double> midpoint_nodes(int n) {
  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    nodes[static_cast<std::size_t>(j)] = (j + 0.5) / n;
  }
  return nodes;
}

PolygonalCurve::PolygonalCurve(std::vector<Vec2> vertices)
    : PolygonalCurve(std::move(vertices), {}) {}

PolygonalCurve::PolygonalCurve(std::vector<Vec2> vertices, std::vector<double> nodes)
    : vertices_(std::move(vertices)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) nodes_ = midpoint_nodes(static_cast<int>(vertices_.size()));
  validate(vertices_, nodes_);
}

double signed_area(std::span<const Vec2> vertices) {
  const std::size_t n = vertices.size();
  double twice = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    twice += cross(vertices[j], vertices[(j + 1) % n]);
  }
  return 0.5 * twice;
}

std::vector<double> edge_lengths(const PolygonalCurve& c) {
  const int n = c.size();
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double len = norm(c.vertex(j) - c.vertex(j - 1));
    if (len == 0.0) {
      throw DegenerateEdge("zero-length edge entering vertex " + std::to_string(j));
    }
    r[static_cast<std::size_t>(j)] = len;
  }
  return r;
}

double min_edge_length(const PolygonalCurve& c) {
  const auto r = edge_lengths(c);
  return *std::min_element(r.begin(), r.end());
}

std::vector<Vec2> edge_normals(const PolygonalCurve& c) {
  const int n = c.size();
  std::vector<Vec2> normals(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Vec2 edge = c.vertex(j) - c.vertex(j - 1);
    const double len = norm(edge);
    if (len == 0.0) {
      throw DegenerateEdge("zero-length edge entering vertex " + std::to_string(j));
    }
    normals[static_cast<std::size_t>(j)] = rotate_quarter(edge / len);
  }
  return normals;
}

Vec2 vertex_weighted_normal(const PolygonalCurve& c, int j) {
  return rotate_quarter(0.5 * (c.vertex(j + 1) - c.vertex(j - 1)));
}

std::vector<Vec2> vertex_weighted_normals(const PolygonalCurve& c) {
  const int n = c.size();
  std::vector<Vec2> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = vertex_weighted_normal(c, j);
  return w;
}

double total_length(const PolygonalCurve& c) {
  double sum = 0.0;
  for (double r : edge_lengths(c)) sum += r;
  return sum;
}

double enclosed_area(const PolygonalCurve& c) { return signed_area(c.vertices()); }

double chord_arc_constant(const PolygonalCurve& c) {
  return chord_arc_constant(c, c.nodes());
}

double chord_arc_constant(const PolygonalCurve& c, std::span<const double> nodes) {
  const int n = c.size();
  if (static_cast<int>(nodes.size()) != n) {
    throw InvalidParameters("chord_arc_constant: node count does not match curve");
  }
  const auto verts = c.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double chord = norm(verts[static_cast<std::size_t>(i)] -
                                verts[static_cast<std::size_t>(j)]);
      double d = std::abs(nodes[static_cast<std::size_t>(i)] -
                          nodes[static_cast<std::size_t>(j)]);
      d = std::min(d, 1.0 - d);  // wraparound parameter distance
      best = std::min(best, chord / d);
    }
  }
  return best;
}

void write_curve_csv(std::ostream& out, const PolygonalCurve& c,
                     std::span<const double> kappa) {
  const bool with_kappa = !kappa.empty();
  if (with_kappa && kappa.size() != c.vertices().size()) {
    throw InvalidParameters("write_curve_csv: kappa length does not match curve");
  }
  out << (with_kappa ? "x,y,kappa\n" : "x,y\n");
  char buf[96];
  for (std::size_t j = 0; j < c.vertices().size(); ++j) {
    const Vec2 v = c.vertices()[j];
    if (with_kappa) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", v.x, v.y, kappa[j]);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.x, v.y);
    }
    out << buf;
  }
}

void write_curve_csv(const std::filesystem::path& path, const PolygonalCurve& c,
                     std::span<const double> kappa) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_curve_csv(out, c, kappa);
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace langmuir
