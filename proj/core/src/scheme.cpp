#include "langmuir/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "langmuir/errors.hpp"

namespace langmuir {

namespace {

constexpr double kCoincidenceThreshold = 1e-14;

int assembly_threads(int n) {
  if (n < 128) return 1;
  unsigned requested = 0;
  if (const char* env = std::getenv("LANGMUIR_THREADS")) {
    requested = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(requested, 1u, 16u));
}

void fill_interaction_rows(const PolygonalCurve& c, std::span<const Vec2> w,
                           DenseMatrix& m, int first_row, int row_stride) {
  const int n = c.size();
  const auto verts = c.vertices();
  for (int j = first_row; j < n; j += row_stride) {
    const Vec2 vj = verts[static_cast<std::size_t>(j)];
    const Vec2 wj = w[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < n; ++k) {
      const Vec2 d = verts[static_cast<std::size_t>(k)] - vj;
      const double r = norm(d);
      if (r < kCoincidenceThreshold) {
        throw CoincidentVertices("vertices " + std::to_string(j) + " and " +
                                 std::to_string(k) + " are coincident");
      }
      const double value = dot(wj, d) * dot(w[static_cast<std::size_t>(k)], d) / (r * r * r);
      m(j, k) = value;
      m(k, j) = value;
    }
  }
}

}  // namespace

std::vector<Vec2> CyclicTridiagonal::apply(std::span<const Vec2> x) const {
  const int n = size();
  std::vector<Vec2> y(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    y[static_cast<std::size_t>(j)] = lower[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(jm)] +
                                     diag[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] +
                                     upper[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(jp)];
  }
  return y;
}

std::vector<double> CyclicTridiagonal::apply(std::span<const double> x) const {
  const int n = size();
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    y[static_cast<std::size_t>(j)] = lower[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(jm)] +
                                     diag[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] +
                                     upper[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(jp)];
  }
  return y;
}

DenseMatrix assemble_interaction(const PolygonalCurve& c) {
  const int n = c.size();
  const auto w = vertex_weighted_normals(c);
  DenseMatrix m(n, n);
  const int threads = assembly_threads(n);
  if (threads == 1) {
    fill_interaction_rows(c, w, m, 0, 1);
    return m;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        fill_interaction_rows(c, w, m, t, threads);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return m;
}

std::vector<double> assemble_lumped_mass(const PolygonalCurve& c) {
  const int n = c.size();
  const auto r = edge_lengths(c);
  std::vector<double> m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    m[static_cast<std::size_t>(j)] =
        0.5 * (r[static_cast<std::size_t>(j)] + r[static_cast<std::size_t>((j + 1) % n)]);
  }
  return m;
}

std::vector<Vec2> assemble_weighted_normals(const PolygonalCurve& c) {
  return vertex_weighted_normals(c);
}

CyclicTridiagonal assemble_stiffness(const PolygonalCurve& c) {
  const int n = c.size();
  const auto r = edge_lengths(c);
  CyclicTridiagonal a;
  a.lower.resize(static_cast<std::size_t>(n));
  a.diag.resize(static_cast<std::size_t>(n));
  a.upper.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double inv_in = 1.0 / r[static_cast<std::size_t>(j)];
    const double inv_out = 1.0 / r[static_cast<std::size_t>((j + 1) % n)];
    a.lower[static_cast<std::size_t>(j)] = -inv_in;
    a.diag[static_cast<std::size_t>(j)] = inv_in + inv_out;
    a.upper[static_cast<std::size_t>(j)] = -inv_out;
  }
  return a;
}

SchemeMatrices assemble(const PolygonalCurve& c) {
  return {assemble_interaction(c), assemble_lumped_mass(c),
          assemble_weighted_normals(c), assemble_stiffness(c)};
}

DenseSystem build_block_system(const PolygonalCurve& c, double tau) {
  if (!(tau > 0.0)) throw InvalidParameters("time step must be positive");
  const int n = c.size();
  const SchemeMatrices mats = assemble(c);
  const auto verts = c.vertices();

  const int dim = 3 * n;
  DenseSystem sys{DenseMatrix(dim, dim), std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
  DenseMatrix& m = sys.matrix;

  const double mass_coeff = tau / std::numbers::pi;
  const double interaction_coeff = tau / (2.0 * std::numbers::pi);

  for (int j = 0; j < n; ++j) {
    // Row j: (tau/pi) M + (tau/2pi) L on the kappa block, W^T on gamma.
    for (int k = 0; k < n; ++k) {
      m(j, k) = interaction_coeff * mats.interaction(j, k);
    }
    m(j, j) += mass_coeff * mats.lumped_mass[static_cast<std::size_t>(j)];
    const Vec2 wj = mats.weighted_normals[static_cast<std::size_t>(j)];
    m(j, n + 2 * j) = wj.x;
    m(j, n + 2 * j + 1) = wj.y;
    sys.rhs[static_cast<std::size_t>(j)] = dot(wj, verts[static_cast<std::size_t>(j)]);

    // Rows n+2j, n+2j+1: W kappa - A gamma = 0.
    m(n + 2 * j, j) = wj.x;
    m(n + 2 * j + 1, j) = wj.y;
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    for (int comp = 0; comp < 2; ++comp) {
      const int row = n + 2 * j + comp;
      m(row, n + 2 * jm + comp) -= mats.stiffness.lower[static_cast<std::size_t>(j)];
      m(row, n + 2 * j + comp) -= mats.stiffness.diag[static_cast<std::size_t>(j)];
      m(row, n + 2 * jp + comp) -= mats.stiffness.upper[static_cast<std::size_t>(j)];
    }
  }
  return sys;
}

std::vector<double> discrete_curvature(const PolygonalCurve& c) {
  const int n = c.size();
  const auto w = vertex_weighted_normals(c);
  const auto ag = assemble_stiffness(c).apply(c.vertices());
  std::vector<double> kappa(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const double wsq = norm_sq(w[static_cast<std::size_t>(j)]);
    if (wsq > 0.0) {
      kappa[static_cast<std::size_t>(j)] =
          dot(w[static_cast<std::size_t>(j)], ag[static_cast<std::size_t>(j)]) / wsq;
    }
  }
  return kappa;
}

SimulationState initial_state(PolygonalCurve curve) {
  std::vector<double> kappa = discrete_curvature(curve);
  return {std::move(curve), std::move(kappa), 0, 0.0};
}

std::pair<SimulationState, StepReport> step(const SimulationState& state, double tau,
                                            const StepLimits& limits) {
  const int n = state.curve.size();
  const DenseSystem sys = build_block_system(state.curve, tau);
  const Solution sol = solve(sys);

  std::vector<double> kappa(sol.x.begin(), sol.x.begin() + n);
  std::vector<Vec2> vertices(static_cast<std::size_t>(n));
  double max_disp = 0.0;
  for (int j = 0; j < n; ++j) {
    const Vec2 v{sol.x[static_cast<std::size_t>(n + 2 * j)],
                 sol.x[static_cast<std::size_t>(n + 2 * j + 1)]};
    vertices[static_cast<std::size_t>(j)] = v;
    max_disp = std::max(max_disp, norm(v - state.curve.vertices()[static_cast<std::size_t>(j)]));
  }

  SimulationState next{
      [&] {
        try {
          return PolygonalCurve(std::move(vertices),
                                std::vector<double>(state.curve.nodes().begin(),
                                                    state.curve.nodes().end()));
        } catch (const Error& e) {
          throw MeshDegenerate("stepped curve invalid: " + std::string(e.what()));
        }
      }(),
      std::move(kappa), state.step + 1, state.time + tau};

  StepReport report{max_disp, sol.residual_rel, min_edge_length(next.curve)};

  if (limits.min_edge > 0.0 && report.min_edge_after < limits.min_edge) {
    throw MeshDegenerate("min edge " + std::to_string(report.min_edge_after) +
                         " below limit " + std::to_string(limits.min_edge));
  }
  if (limits.min_chord_arc > 0.0) {
    const double ca = chord_arc_constant(next.curve);
    if (ca < limits.min_chord_arc) {
      throw MeshDegenerate("chord-arc constant " + std::to_string(ca) +
                           " below limit " + std::to_string(limits.min_chord_arc));
    }
  }
  return {std::move(next), report};
}

void SimConfig::validate() const {
  if (n < 3) throw InvalidParameters("config: n must be >= 3");
  if (!(tau > 0.0)) throw InvalidParameters("config: tau must be positive");
  if (steps < 0) throw InvalidParameters("config: steps must be >= 0");
  if (snapshot_every <= 0) throw InvalidParameters("config: snapshot_every must be >= 1");
  if (!(min_edge_factor > 0.0 && min_edge_factor < 1.0)) {
    throw InvalidParameters("config: min_edge_factor must be in (0,1)");
  }
  if (!(chord_arc_min > 0.0 && chord_arc_min < 1.0)) {
    throw InvalidParameters("config: chord_arc_min must be in (0,1)");
  }
}

RunResult run(const SimConfig& config, const RunCallbacks& callbacks) {
  config.validate();
  SimulationState state = initial_state(initial_polygon(config.initial, config.n));

  const double mean_edge = total_length(state.curve) / state.curve.size();
  const StepLimits limits{config.min_edge_factor * mean_edge, config.chord_arc_min};

  if (callbacks.on_step) callbacks.on_step(state, StepReport{0.0, 0.0, min_edge_length(state.curve)});
  if (callbacks.on_snapshot) callbacks.on_snapshot(state);

  for (int m = 0; m < config.steps; ++m) {
    try {
      auto [next, report] = step(state, config.tau, limits);
      state = std::move(next);
      if (callbacks.on_step) callbacks.on_step(state, report);
      const bool due = state.step % config.snapshot_every == 0 || state.step == config.steps;
      if (due && callbacks.on_snapshot) callbacks.on_snapshot(state);
    } catch (const MeshDegenerate& e) {
      return {std::move(state), RunStatus::mesh_degenerate, m,
              "step " + std::to_string(m) + ": " + e.what()};
    } catch (const SolveFailed& e) {
      return {std::move(state), RunStatus::solve_failed, m,
              "step " + std::to_string(m) + ": " + e.what()};
    }
  }
  return {std::move(state), RunStatus::completed, -1, "completed"};
}

}  // namespace langmuir
