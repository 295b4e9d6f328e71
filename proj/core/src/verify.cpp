#include "langmuir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include "langmuir/diagnostics.hpp"
#include "langmuir/errors.hpp"
#include "langmuir/initcurves.hpp"
#include "langmuir/kernel.hpp"
#include "langmuir/scheme.hpp"

namespace langmuir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

PolygonalCurve random_star_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(8, 64);
  std::uniform_real_distribution<double> radius_dist(0.5, 1.5);
  std::uniform_real_distribution<double> jitter_dist(-0.2, 0.2);
  std::uniform_real_distribution<double> center_dist(-2.0, 2.0);
  const int n = size_dist(rng);
  const Vec2 center{center_dist(rng), center_dist(rng)};
  std::vector<Vec2> vertices(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * kPi * (j + jitter_dist(rng)) / n;
    const double r = radius_dist(rng);
    vertices[static_cast<std::size_t>(j)] =
        center + Vec2{r * std::cos(angle), r * std::sin(angle)};
  }
  return PolygonalCurve(std::move(vertices));
}

PolygonalCurve regular_polygon(int n) { return sample(AnalyticCurve::circle(1.0), n); }

}  // namespace

std::vector<CheckResult> check_exact_identities() {
  std::mt19937_64 rng(0x5eedULL);
  const int trials = 120;

  double worst_sym = 0.0, worst_diag = 0.0;
  double worst_normals = 0.0, worst_const = 0.0, worst_mass = 0.0;
  // All identities hold to machine precision; the tolerances below are
  // rounding budgets for the accumulated sums.
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const PolygonalCurve c = random_star_polygon(rng);
    const int n = c.size();

    const DenseMatrix L = assemble_interaction(c);
    for (int j = 0; j < n; ++j) {
      worst_diag = std::max(worst_diag, std::abs(L(j, j)));
      for (int k = 0; k < n; ++k) {
        worst_sym = std::max(worst_sym, std::abs(L(j, k) - L(k, j)));
      }
    }

    double max_coord = 0.0;
    for (const Vec2& v : c.vertices()) {
      max_coord = std::max({max_coord, std::abs(v.x), std::abs(v.y)});
    }
    Vec2 normal_sum{};
    for (const Vec2& w : assemble_weighted_normals(c)) normal_sum += w;
    const double normal_tol = 16.0 * n * kEps * max_coord;
    worst_normals = std::max(worst_normals, norm(normal_sum) / normal_tol);

    const CyclicTridiagonal A = assemble_stiffness(c);
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    const auto a_ones = A.apply(std::span<const double>(ones));
    const double diag_max = *std::max_element(A.diag.begin(), A.diag.end());
    for (double v : a_ones) {
      worst_const = std::max(worst_const, std::abs(v) / (8.0 * kEps * diag_max));
    }

    const auto mass = assemble_lumped_mass(c);
    double mass_sum = 0.0;
    for (double m : mass) mass_sum += m;
    const double length = total_length(c);
    worst_mass =
        std::max(worst_mass, std::abs(mass_sum - length) / (4.0 * n * kEps * length));
  }
  ok = worst_sym == 0.0 && worst_diag == 0.0 && worst_normals <= 1.0 &&
       worst_const <= 1.0 && worst_mass <= 1.0;
  return {{"exact-discrete-identities", ok,
           fmt("%d curves: max|L-L^T|=%.1g, max|L_jj|=%.1g, "
               "normal-sum/tol=%.2f, stiffness-const/tol=%.2f, mass-vs-length/tol=%.2f",
               trials, worst_sym, worst_diag, worst_normals, worst_const, worst_mass)}};
}

std::vector<CheckResult> check_circle_kernel_oracle() {
  const double radii[] = {0.5, 1.0, 2.0, 5.0, 10.0};
  const double angles[] = {kPi / 6.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi};
  const double alpha0 = 0.7;
  double worst = 0.0;
  for (double R : radii) {
    for (double phi : angles) {
      auto sample_at = [&](double a) {
        return SmoothCurveSample{{R * std::cos(a), R * std::sin(a)},
                                 {std::cos(a), std::sin(a)},
                                 1.0 / R,
                                 1.0};
      };
      const double k = interaction_kernel(sample_at(alpha0), sample_at(alpha0 + phi));
      const double oracle = -std::abs(std::sin(phi / 2.0)) / (2.0 * R);
      worst = std::max(worst, std::abs(k - oracle));
    }
  }
  const bool ok = worst <= 1e-12;
  return {{"circle-kernel-oracle", ok,
           fmt("20 (R,phi) pairs: max |K - oracle| = %.3g (tol 1e-12)", worst)}};
}

std::vector<CheckResult> check_circle_equilibrium() {
  const double tau = 1e-2;
  std::vector<std::pair<double, double>> rates;
  double disp_at_200 = 0.0;
  for (int n : {50, 100, 200, 400}) {
    const auto [next, report] = step(initial_state(regular_polygon(n)), tau);
    rates.emplace_back(1.0 / n, report.max_displacement / tau);
    if (n == 200) disp_at_200 = report.max_displacement;
  }
  const double eoc = estimated_order(rates);
  const bool ok = eoc >= 1.8 && disp_at_200 <= 5e-4;
  return {{"circle-equilibrium-eoc", ok,
           fmt("max_displacement/tau EOC = %.3f over n=50..400 (need >= 1.8); "
               "displacement at n=200 = %.3g (tol 5e-4)",
               eoc, disp_at_200)}};
}

std::vector<CheckResult> check_normal_limit_matching() {
  const int n = 4096;
  const double ell1 = 1e-1;
  const double ell2 = 1e-2;
  const double floor = 1e-12;

  struct Case {
    const char* label;
    AnalyticCurve curve;
  };
  const Case cases[] = {{"circle", AnalyticCurve::circle(1.0)},
                        {"ellipse", AnalyticCurve::ellipse(2.0, 1.0)}};

  bool ok = true;
  double worst_one_sided = 0.0;  // |u(ell) - limit| / budget
  double worst_cross = 0.0;      // |interior - exterior| / budget
  for (const Case& tc : cases) {
    const auto samples = sample_smooth(tc.curve, n);
    const auto coarse = sample_smooth(tc.curve, n / 2);
    for (int idx : {0, n / 4, n / 2, 3 * n / 4}) {
      const auto at = static_cast<std::size_t>(idx);
      const SmoothCurveSample& z = samples[at];
      const Vec2 limit = normal_limit_velocity(samples, at);
      const Vec2 limit_coarse =
          normal_limit_velocity(coarse, static_cast<std::size_t>(idx / 2));
      const double quad_err = norm(limit - limit_coarse);

      double side_err[2];
      Vec2 closest[2];
      for (int s = 0; s < 2; ++s) {
        const double sign = s == 0 ? 1.0 : -1.0;  // exterior, interior
        const Vec2 u1 = off_curve_velocity(samples, z.position + (sign * ell1) * z.unit_outward_normal);
        const Vec2 u2 = off_curve_velocity(samples, z.position + (sign * ell2) * z.unit_outward_normal);
        // Budget: last observed convergence increment in ell, plus the
        // measured quadrature refinement error of the limit itself.
        const double budget = norm(u1 - u2) + quad_err + floor;
        const double ratio = std::max(norm(u1 - limit), norm(u2 - limit)) / (10.0 * budget);
        worst_one_sided = std::max(worst_one_sided, ratio);
        ok = ok && ratio <= 1.0;
        side_err[s] = budget;
        closest[s] = u2;
      }
      const double cross = norm(closest[0] - closest[1]) /
                           (2.0 * std::max(side_err[0], side_err[1]));
      worst_cross = std::max(worst_cross, cross);
      ok = ok && cross <= 1.0;
    }
  }
  return {{"normal-limit-matching", ok,
           fmt("circle + 2:1 ellipse, ell in {1e-1,1e-2}: worst one-sided gap = "
               "%.2f of its 10x budget; interior/exterior gap = %.2f of its 2x budget",
               worst_one_sided, worst_cross)}};
}

std::vector<CheckResult> check_dipole_decay() {
  const auto samples = sample_smooth(AnalyticCurve::bola(), 2048);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : samples) {
    xmin = std::min(xmin, s.position.x);
    xmax = std::max(xmax, s.position.x);
    ymin = std::min(ymin, s.position.y);
    ymax = std::max(ymax, s.position.y);
  }
  const double diam = std::hypot(xmax - xmin, ymax - ymin);

  const int count = 12;
  std::vector<double> radii(count), magnitudes(count);
  const double directions[] = {0.37, 1.2, 2.5, 4.0};
  for (int i = 0; i < count; ++i) {
    const double r = 10.0 * diam * std::pow(10.0, i / (count - 1.0));
    double best = 0.0;
    for (double a : directions) {
      const Vec2 x{r * std::cos(a), r * std::sin(a)};
      best = std::max(best, norm(off_curve_velocity(samples, x)));
    }
    radii[static_cast<std::size_t>(i)] = r;
    magnitudes[static_cast<std::size_t>(i)] = best;
  }
  const double slope = decay_slope(radii, magnitudes);
  const bool ok = std::abs(slope + 2.0) <= 0.1;
  return {{"dipole-decay-slope", ok,
           fmt("|u| over radii [%.0f, %.0f]: log-log slope = %.4f (need -2 +/- 0.1)",
               radii.front(), radii.back(), slope)}};
}

std::vector<CheckResult> check_curvature_consistency() {
  const double tau = 1e-2;
  std::vector<std::pair<double, double>> errors;
  for (int n : {50, 100, 200, 400}) {
    const auto [next, report] = step(initial_state(regular_polygon(n)), tau);
    double err = 0.0;
    for (double k : next.curvature) err = std::max(err, std::abs(k - 1.0));
    errors.emplace_back(1.0 / n, err);
  }
  const double eoc = estimated_order(errors);
  const bool ok = eoc >= 1.8;
  return {{"curvature-consistency-eoc", ok,
           fmt("max |kappa - 1/R| EOC = %.3f over n=50..400 (need >= 1.8); "
               "error at n=400 = %.3g",
               eoc, errors.back().second)}};
}

namespace {

struct RunSummary {
  RunResult result;
  std::vector<double> lengths;
  double initial_area = 0.0;
  double final_area = 0.0;
  double max_residual = 0.0;
  double wall_seconds = 0.0;
  bool length_monotone = true;
};

RunSummary run_and_summarize(const SimConfig& config) {
  std::vector<double> lengths;
  double initial_area = 0.0;
  double max_residual = 0.0;
  bool monotone = true;
  RunCallbacks callbacks;
  callbacks.on_step = [&](const SimulationState& state, const StepReport& report) {
    const double length = total_length(state.curve);
    if (!lengths.empty() && length > lengths.back() * (1.0 + 1e-12)) monotone = false;
    lengths.push_back(length);
    max_residual = std::max(max_residual, report.linear_residual);
    if (state.step == 0) initial_area = enclosed_area(state.curve);
  };
  const auto t0 = std::chrono::steady_clock::now();
  RunResult result = run(config, callbacks);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double final_area = enclosed_area(result.final_state.curve);
  return {std::move(result), std::move(lengths), initial_area,
          final_area,        max_residual,       wall,
          monotone};
}

}  // namespace

std::vector<CheckResult> check_reference_run() {
  SimConfig reference;
  reference.initial = BolaParams{};
  reference.n = 200;
  reference.tau = 1e-2;
  reference.steps = 1500;

  SimConfig refined = reference;
  refined.n = 400;
  refined.tau = 5e-3;
  refined.steps = 3000;

  const RunSummary ref = run_and_summarize(reference);
  const RunSummary fine = run_and_summarize(refined);

  std::vector<CheckResult> results;

  results.push_back(
      {"reference-run-length-monotone", ref.length_monotone && ref.result.status == RunStatus::completed,
       fmt("length %.6f -> %.6f over %zu records, non-increasing at every step "
           "(slack 1e-12 relative): %s",
           ref.lengths.front(), ref.lengths.back(), ref.lengths.size(),
           ref.length_monotone ? "yes" : "no")});

  const double drift_ref = std::abs(ref.final_area - ref.initial_area) / ref.initial_area;
  const double drift_fine = std::abs(fine.final_area - fine.initial_area) / fine.initial_area;
  const double shrink = drift_fine > 0.0 ? drift_ref / drift_fine
                                         : std::numeric_limits<double>::infinity();
  results.push_back({"reference-run-area-drift",
                     drift_ref <= 0.02 && shrink >= 1.5,
                     fmt("relative area drift %.4g (tol 0.02); refined (tau,h)/2 drift "
                         "%.4g, shrink factor %.2f (need >= 1.5)",
                         drift_ref, drift_fine, shrink)});

  const double len = ref.lengths.back();
  const double ratio = len * len / (4.0 * kPi * ref.final_area);
  results.push_back({"reference-run-final-roundness", ratio <= 1.01,
                     fmt("final isoperimetric ratio %.6f (tol 1.01)", ratio)});

  results.push_back({"reference-run-mesh-health",
                     ref.result.status == RunStatus::completed &&
                         fine.result.status == RunStatus::completed,
                     fmt("reference: %s; refined: %s", ref.result.message.c_str(),
                         fine.result.message.c_str())});

  results.push_back({"reference-run-wall-time", ref.wall_seconds <= 300.0,
                     fmt("reference run %.1f s (limit 300 s); refined run %.1f s",
                         ref.wall_seconds, fine.wall_seconds)});

  results.push_back({"solver-residual-gate", ref.max_residual <= 1e-8,
                     fmt("max relative residual %.3g over %d reference steps (tol 1e-8)",
                         ref.max_residual, reference.steps)});

  return results;
}

VerifySuite parse_suite(const std::string& name) {
  if (name == "kernel") return VerifySuite::kernel;
  if (name == "scheme") return VerifySuite::scheme;
  if (name == "convergence") return VerifySuite::convergence;
  if (name == "all") return VerifySuite::all;
  throw InvalidParameters("unknown verification suite '" + name +
                          "' (expected kernel, scheme, convergence, or all)");
}

std::vector<CheckResult> run_suite(VerifySuite suite, std::ostream* log) {
  std::vector<std::vector<CheckResult> (*)()> checks;
  switch (suite) {
    case VerifySuite::kernel:
      checks = {check_circle_kernel_oracle, check_normal_limit_matching,
                check_dipole_decay};
      break;
    case VerifySuite::scheme:
      checks = {check_exact_identities, check_circle_equilibrium};
      break;
    case VerifySuite::convergence:
      checks = {check_circle_equilibrium, check_curvature_consistency};
      break;
    case VerifySuite::all:
      checks = {check_exact_identities,     check_circle_kernel_oracle,
                check_circle_equilibrium,   check_normal_limit_matching,
                check_dipole_decay,         check_curvature_consistency,
                check_reference_run};
      break;
  }
  std::vector<CheckResult> all;
  for (auto* fn : checks) {
    for (CheckResult& r : fn()) {
      if (log) {
        *log << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        log->flush();
      }
      all.push_back(std::move(r));
    }
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace langmuir
