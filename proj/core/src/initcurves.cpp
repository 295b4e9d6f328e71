#include "langmuir/initcurves.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "langmuir/errors.hpp"

namespace langmuir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Frame {
  Vec2 pos;
  Vec2 d1;
  double kappa;
};

// First quarter of the dumbbell: the upper-right lobe arc followed by the
// upper-right half of the neck line, for u in [0, 1/4].
//   arc  (u < 1/8):   (5 + rho + rho cos(w u), rho sin(w u)),  w = 8(pi - theta)
//   line (u >= 1/8):  (2 c (1 - 4u), eps),                     c = 5 + rho(1 - cos theta)
// `arc_branch` selects the branch at exactly u = 1/8 (left limit vs value).
Frame bola_quarter(const BolaParams& p, double u, bool arc_branch) {
  const double theta = std::asin(p.eps / p.rho);
  if (arc_branch) {
    const double w = 8.0 * (std::numbers::pi - theta);
    const double a = w * u;
    return {{5.0 + p.rho + p.rho * std::cos(a), p.rho * std::sin(a)},
            {-p.rho * w * std::sin(a), p.rho * w * std::cos(a)},
            1.0 / p.rho};
  }
  const double c = 5.0 + p.rho * (1.0 - std::cos(theta));
  return {{2.0 * c * (1.0 - 4.0 * u), p.eps}, {-8.0 * c, 0.0}, 0.0};
}

// Upper half (u in [0, 1/2]): the quarter above, then its mirror image in the
// y-axis traversed via u -> 1/2 - u.
Frame bola_half(const BolaParams& p, double u, bool left_limit) {
  if (u < 0.25 || (left_limit && u == 0.25)) {
    const bool arc = left_limit ? u <= 0.125 : u < 0.125;
    return bola_quarter(p, u, arc);
  }
  // Approaching u from the left means approaching w from the right, which
  // matches the half-open branch intervals, so no branch override is needed.
  const double w = 0.5 - u;
  const Frame f = bola_quarter(p, w, /*arc_branch=*/w < 0.125);
  return {{-f.pos.x, f.pos.y}, {f.d1.x, -f.d1.y}, f.kappa};
}

// Full curve: lower half is the point reflection of the upper half.
Frame bola_frame(const BolaParams& p, double u, bool left_limit = false) {
  if (u < 0.5 || (left_limit && u == 0.5)) return bola_half(p, u, left_limit);
  const Frame f = bola_half(p, u - 0.5, left_limit);
  return {-f.pos, -f.d1, f.kappa};
}

Frame circle_frame(const CircleParams& p, double u) {
  const double a = kTwoPi * u;
  const double c = std::cos(a);
  const double s = std::sin(a);
  return {{p.center.x + p.radius * c, p.center.y + p.radius * s},
          {-kTwoPi * p.radius * s, kTwoPi * p.radius * c},
          1.0 / p.radius};
}

Frame ellipse_frame(const EllipseParams& p, double u) {
  const double t = kTwoPi * u;
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double g = p.a * p.a * s * s + p.b * p.b * c * c;
  return {{p.a * c, p.b * s},
          {-kTwoPi * p.a * s, kTwoPi * p.b * c},
          p.a * p.b / (g * std::sqrt(g))};
}

double wrap_unit(double u) {
  u -= std::floor(u);
  return u < 1.0 ? u : 0.0;
}

Frame dispatch_frame(const CurveDescriptor& d, double u) {
  if (const auto* b = std::get_if<BolaParams>(&d)) return bola_frame(*b, u);
  if (const auto* c = std::get_if<CircleParams>(&d)) return circle_frame(*c, u);
  if (const auto* e = std::get_if<EllipseParams>(&d)) return ellipse_frame(*e, u);
  throw InvalidParameters("file-backed curves have no analytic parameterization");
}

}  // namespace

AnalyticCurve AnalyticCurve::bola(double eps, double rho) {
  if (!(eps > 0.0) || !(eps < rho)) {
    throw InvalidParameters("bola requires 0 < eps < rho");
  }
  const BolaParams p{eps, rho};
  AnalyticCurve curve{CurveDescriptor{p}};
  // Branch junctions must agree between the two one-sided formulas.
  for (double u : {0.125, 0.25, 0.5, 0.625, 0.75, 1.0}) {
    const Vec2 right = bola_frame(p, wrap_unit(u)).pos;
    const Vec2 left = bola_frame(p, u, /*left_limit=*/true).pos;
    if (norm(right - left) > 1e-12) {
      throw InvalidParameters("bola branches discontinuous at u = " + std::to_string(u));
    }
  }
  return curve;
}

AnalyticCurve AnalyticCurve::circle(double radius, Vec2 center) {
  if (!(radius > 0.0)) {
    throw NonpositiveRadius("circle radius must be positive, got " +
                            std::to_string(radius));
  }
  return AnalyticCurve{CurveDescriptor{CircleParams{radius, center}}};
}

AnalyticCurve AnalyticCurve::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidParameters("ellipse semi-axes must be positive");
  }
  return AnalyticCurve{CurveDescriptor{EllipseParams{a, b}}};
}

AnalyticCurve AnalyticCurve::make(const CurveDescriptor& d) {
  if (const auto* b = std::get_if<BolaParams>(&d)) return bola(b->eps, b->rho);
  if (const auto* c = std::get_if<CircleParams>(&d)) return circle(c->radius, c->center);
  if (const auto* e = std::get_if<EllipseParams>(&d)) return ellipse(e->a, e->b);
  throw InvalidParameters("cannot build an analytic curve from a file descriptor");
}

Vec2 AnalyticCurve::evaluate(double u) const {
  return dispatch_frame(descriptor_, wrap_unit(u)).pos;
}

CurveFrame AnalyticCurve::frame(double u) const {
  const Frame f = dispatch_frame(descriptor_, wrap_unit(u));
  return {f.pos, f.d1, f.kappa};
}

PolygonalCurve sample(const AnalyticCurve& curve, int n) {
  if (n < 3) throw InvalidParameters("sample requires n >= 3, got " + std::to_string(n));
  std::vector<double> nodes = midpoint_nodes(n);
  std::vector<Vec2> vertices(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    vertices[static_cast<std::size_t>(j)] = curve.evaluate(nodes[static_cast<std::size_t>(j)]);
  }
  if (signed_area(vertices) <= 0.0) {
    throw SelfIntersectingSample("sampled polygon has non-positive signed area");
  }
  PolygonalCurve polygon(std::move(vertices), std::move(nodes));
  if (chord_arc_constant(polygon) <= 0.0) {
    throw SelfIntersectingSample("sampled polygon has zero chord-arc constant");
  }
  return polygon;
}

std::vector<SmoothCurveSample> sample_smooth(const AnalyticCurve& curve, int n) {
  if (n < 3) throw InvalidParameters("sample_smooth requires n >= 3");
  std::vector<SmoothCurveSample> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const CurveFrame f = curve.frame((j + 0.5) / n);
    const double speed = norm(f.derivative);
    samples[static_cast<std::size_t>(j)] = {
        f.position, rotate_quarter(f.derivative / speed), f.curvature, speed / n};
  }
  return samples;
}

PolygonalCurve load_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve file: " + path.string());

  auto fail = [&](int line, const std::string& what) -> ParseError {
    return ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
  };

  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw fail(1, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y" && line != "x,y,kappa") {
    throw fail(1, "expected header 'x,y', got '" + line + "'");
  }

  std::vector<Vec2> vertices;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    Vec2 v;
    for (int k = 0; k < 2; ++k) {
      if (!std::getline(row, field, ',')) throw fail(lineno, "expected two fields");
      const char* first = field.data();
      const char* last = field.data() + field.size();
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw fail(lineno, "cannot parse number '" + field + "'");
      }
      (k == 0 ? v.x : v.y) = value;
    }
    vertices.push_back(v);
  }

  try {
    return PolygonalCurve(std::move(vertices));
  } catch (const DegenerateEdge& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

PolygonalCurve initial_polygon(const CurveDescriptor& d, int n) {
  if (const auto* f = std::get_if<FileParams>(&d)) return load_curve_csv(f->path);
  return sample(AnalyticCurve::make(d), n);
}

CurveDescriptor parse_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (name == "file") {
    if (args.empty()) throw InvalidParameters("file descriptor needs a path: file:PATH");
    return FileParams{args};
  }

  std::vector<double> params;
  if (!args.empty()) {
    std::istringstream ss(args);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw InvalidParameters("bad numeric parameter '" + field + "' in descriptor '" +
                                text + "'");
      }
    }
  }

  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw InvalidParameters("descriptor '" + text + "' has wrong parameter count");
    }
  };
  if (name == "bola") {
    want(0, 2);
    BolaParams p;
    if (params.size() >= 1) p.eps = params[0];
    if (params.size() >= 2) p.rho = params[1];
    return p;
  }
  if (name == "circle") {
    want(0, 3);
    CircleParams p;
    if (params.size() >= 1) p.radius = params[0];
    if (params.size() == 2) {
      throw InvalidParameters("circle center needs both coordinates: circle:R,cx,cy");
    }
    if (params.size() == 3) p.center = {params[1], params[2]};
    return p;
  }
  if (name == "ellipse") {
    want(0, 2);
    EllipseParams p;
    if (params.size() >= 1) p.a = params[0];
    if (params.size() >= 2) p.b = params[1];
    return p;
  }
  throw InvalidParameters("unknown curve descriptor '" + text + "'");
}

std::string descriptor_name(const CurveDescriptor& d) {
  if (const auto* b = std::get_if<BolaParams>(&d)) {
    return "bola:" + std::to_string(b->eps) + "," + std::to_string(b->rho);
  }
  if (const auto* c = std::get_if<CircleParams>(&d)) {
    return "circle:" + std::to_string(c->radius) + "," + std::to_string(c->center.x) +
           "," + std::to_string(c->center.y);
  }
  if (const auto* e = std::get_if<EllipseParams>(&d)) {
    return "ellipse:" + std::to_string(e->a) + "," + std::to_string(e->b);
  }
  return "file:" + std::get<FileParams>(d).path;
}

}  // namespace langmuir
