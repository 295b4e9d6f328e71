#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "langmuir/diagnostics.hpp"
#include "langmuir/errors.hpp"
#include "langmuir/geometry.hpp"
#include "langmuir/initcurves.hpp"

using namespace langmuir;

namespace {

constexpr double kPi = std::numbers::pi;

PolygonalCurve unit_square_diamond() {
  return PolygonalCurve({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

PolygonalCurve regular_ngon(int n, double radius = 1.0) {
  return sample(AnalyticCurve::circle(radius), n);
}

PolygonalCurve random_star(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::vector<Vec2> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double a = 2.0 * kPi * (j + jitter(rng)) / n;
    const double r = radius(rng);
    v[static_cast<std::size_t>(j)] = {r * std::cos(a), r * std::sin(a)};
  }
  return PolygonalCurve(std::move(v));
}

// Two CCW quadrilateral lobes sharing the origin: valid curve whose vertices
// 0 and 4 coincide at distinct parameters.
PolygonalCurve pinched_peanut() {
  return PolygonalCurve({{0, 0},
                         {1, -1},
                         {2, 0},
                         {1, 1},
                         {0, 0},
                         {-1, 1},
                         {-2, 0},
                         {-1, -1}});
}

}  // namespace

TEST_CASE("rotate_quarter matches the quarter-turn matrix") {
  CHECK(rotate_quarter({1, 0}).x == 0.0);
  CHECK(rotate_quarter({1, 0}).y == -1.0);
  CHECK(rotate_quarter({0, 1}).x == 1.0);
  CHECK(rotate_quarter({0, 1}).y == 0.0);
  CHECK(rotate_quarter({3, 4}).x == 4.0);
  CHECK(rotate_quarter({3, 4}).y == -3.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int t = 0; t < 50; ++t) {
    const Vec2 v{d(rng), d(rng)};
    const Vec2 twice = rotate_quarter(rotate_quarter(v));
    CHECK(twice.x == -v.x);  // exact involution up to sign
    CHECK(twice.y == -v.y);
  }
}

TEST_CASE("curve construction validates invariants") {
  CHECK_THROWS_AS(PolygonalCurve({{0, 0}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(PolygonalCurve({{0, 0}, {0, 0}, {1, 1}}), DegenerateEdge);
  // clockwise input is an error, not silently reversed
  CHECK_THROWS_AS(PolygonalCurve({{0, -1}, {-1, 0}, {0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(PolygonalCurve({{1, 0}, {0, 1}, {-1, 0}}, {0.5, 0.1, 0.9}),
                  ValidationError);  // nodes not increasing
  CHECK_THROWS_AS(PolygonalCurve({{1, 0}, {0, 1}, {-1, 0}}, {0.1, 0.5, 1.5}),
                  ValidationError);  // node outside [0,1)
}

TEST_CASE("edge lengths") {
  const auto r = edge_lengths(unit_square_diamond());
  for (double len : r) CHECK(len == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const int n = 24;
  for (double len : edge_lengths(regular_ngon(n))) {
    CHECK(len == doctest::Approx(2.0 * std::sin(kPi / n)).epsilon(1e-13));
  }
}

TEST_CASE("edge normals point outward") {
  // square edge from (1,0) to (0,1)
  const auto normals = edge_normals(unit_square_diamond());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(normals[1].x == doctest::Approx(s).epsilon(1e-15));
  CHECK(normals[1].y == doctest::Approx(s).epsilon(1e-15));

  // 4-gon sampled from the circle: the bottom edge runs between angles
  // 5pi/4 and 7pi/4, so its outward normal is exactly (0,-1)
  const auto square = regular_ngon(4);
  bool found_bottom = false;
  for (const Vec2& nu : edge_normals(square)) {
    CHECK(norm(nu) == doctest::Approx(1.0).epsilon(1e-15));
    if (std::abs(nu.x) < 1e-14 && nu.y < 0) found_bottom = true;
  }
  CHECK(found_bottom);
}

TEST_CASE("vertex weighted normals") {
  const int n = 16;
  const auto ngon = regular_ngon(n);
  for (int j = 0; j < n; ++j) {
    const Vec2 w = vertex_weighted_normal(ngon, j);
    CHECK(norm(w) == doctest::Approx(std::sin(2.0 * kPi / n)).epsilon(1e-13));
    // radially outward
    const Vec2 v = ngon.vertex(j);
    CHECK(dot(w, v) == doctest::Approx(norm(w) * norm(v)).epsilon(1e-12));
  }

  // square above, vertex (1,0): rotate_quarter(((0,1)-(0,-1))/2) = (1,0)
  const Vec2 w0 = vertex_weighted_normal(unit_square_diamond(), 0);
  CHECK(w0.x == 1.0);
  CHECK(w0.y == 0.0);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_star(rng, 8 + t);
    Vec2 sum{};
    for (int j = 0; j < c.size(); ++j) sum += vertex_weighted_normal(c, j);
    CHECK(norm(sum) <= 1e-13);  // telescoping
  }
}

TEST_CASE("total length and enclosed area closed forms") {
  CHECK(total_length(unit_square_diamond()) ==
        doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(enclosed_area(unit_square_diamond()) == doctest::Approx(2.0).epsilon(1e-15));

  const int n = 200;
  CHECK(total_length(regular_ngon(n)) ==
        doctest::Approx(2.0 * n * std::sin(kPi / n)).epsilon(1e-13));
  CHECK(enclosed_area(regular_ngon(n)) ==
        doctest::Approx(0.5 * n * std::sin(2.0 * kPi / n)).epsilon(1e-13));

  // clockwise vertex loop has negative shoelace area
  std::vector<Vec2> cw{{0, -1}, {-1, 0}, {0, 1}, {1, 0}};
  CHECK(signed_area(cw) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("length and area converge to the circle at second order") {
  std::vector<std::pair<double, double>> len_err, area_err;
  for (int n : {32, 64, 128, 256}) {
    len_err.emplace_back(1.0 / n, std::abs(total_length(regular_ngon(n)) - 2.0 * kPi));
    area_err.emplace_back(1.0 / n, std::abs(enclosed_area(regular_ngon(n)) - kPi));
  }
  CHECK(estimated_order(len_err) >= 1.9);
  CHECK(estimated_order(area_err) >= 1.9);
}

TEST_CASE("rigid motions preserve length and area") {
  std::mt19937_64 rng(23);
  const auto c = random_star(rng, 17);
  const double len = total_length(c);
  const double area = enclosed_area(c);

  std::vector<Vec2> moved;
  const double angle = 0.7;
  for (const Vec2& v : c.vertices()) {
    const Vec2 r{v.x * std::cos(angle) - v.y * std::sin(angle),
                 v.x * std::sin(angle) + v.y * std::cos(angle)};
    moved.push_back(r + Vec2{0.5, -1.25});
  }
  const PolygonalCurve m(std::move(moved));
  CHECK(total_length(m) == doctest::Approx(len).epsilon(1e-12));
  CHECK(enclosed_area(m) == doctest::Approx(area).epsilon(1e-12));
}

TEST_CASE("chord-arc constant") {
  // even regular polygon: minimized at antipodal pairs, |d|=2, parameter 1/2
  CHECK(chord_arc_constant(regular_ngon(16)) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(chord_arc_constant(regular_ngon(64)) == doctest::Approx(4.0).epsilon(1e-13));

  // independent closed form: min over offsets k of 2 sin(pi k/n) / (k/n)
  const int n = 20;
  double oracle = 1e300;
  for (int k = 1; k <= n / 2; ++k) {
    oracle = std::min(oracle, 2.0 * std::sin(kPi * k / n) / (static_cast<double>(k) / n));
  }
  CHECK(chord_arc_constant(regular_ngon(n)) == doctest::Approx(oracle).epsilon(1e-13));

  CHECK(chord_arc_constant(pinched_peanut()) == 0.0);

  // translation invariance
  const auto base = regular_ngon(16);
  std::vector<Vec2> shifted;
  for (const Vec2& v : base.vertices()) shifted.push_back(v + Vec2{3, -7});
  CHECK(chord_arc_constant(PolygonalCurve(std::move(shifted))) ==
        doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("curve csv round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "langmuir_geom_csv";
  fs::create_directories(dir);

  const auto square = unit_square_diamond();
  write_curve_csv(dir / "square.csv", square);
  const auto loaded = load_curve_csv(dir / "square.csv");
  REQUIRE(loaded.size() == square.size());
  for (int j = 0; j < square.size(); ++j) {
    CHECK(loaded.vertex(j).x == square.vertex(j).x);  // 17 digits round-trip exactly
    CHECK(loaded.vertex(j).y == square.vertex(j).y);
  }

  // kappa column is written and ignored on load
  write_curve_csv(dir / "square_k.csv", square, std::vector<double>{1, 2, 3, 4});
  {
    std::ifstream in(dir / "square_k.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,kappa");
  }
  CHECK(load_curve_csv(dir / "square_k.csv").size() == 4);

  std::ofstream(dir / "short.csv") << "x,y\n1,0\n0,1\n";
  CHECK_THROWS_AS(load_curve_csv(dir / "short.csv"), ValidationError);

  std::ofstream(dir / "bad.csv") << "x,y\n1,0\nnope,1\n0,1\n";
  try {
    load_curve_csv(dir / "bad.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);  // line number
  }

  std::ofstream(dir / "hdr.csv") << "a,b\n1,0\n";
  CHECK_THROWS_AS(load_curve_csv(dir / "hdr.csv"), ParseError);

  std::ofstream(dir / "cw.csv") << "x,y\n0,-1\n-1,0\n0,1\n1,0\n";
  CHECK_THROWS_AS(load_curve_csv(dir / "cw.csv"), ValidationError);
}
