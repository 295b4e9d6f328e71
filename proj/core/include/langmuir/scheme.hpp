#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "langmuir/geometry.hpp"
#include "langmuir/initcurves.hpp"
#include "langmuir/linsolve.hpp"
#include "langmuir/vec2.hpp"

namespace langmuir {

/// Cyclic tridiagonal matrix, stored by row: lower[j], diag[j], upper[j] are
/// the coefficients of x_{j-1}, x_j, x_{j+1} (indices mod n).
struct CyclicTridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  int size() const { return static_cast<int>(diag.size()); }
  std::vector<Vec2> apply(std::span<const Vec2> x) const;
  std::vector<double> apply(std::span<const double> x) const;
};

/// The assembled blocks of the semi-implicit scheme at one time level:
///   interaction       dense n x n, symmetric, zero diagonal
///   lumped_mass       positive diagonal, entries (r_j + r_{j+1})/2
///   weighted_normals  diagonal of vertex-weighted normals (sums to zero)
///   stiffness         cyclic tridiagonal arclength Laplacian (row sums zero);
///                     each scalar entry multiplies the 2x2 identity
struct SchemeMatrices {
  DenseMatrix interaction;
  std::vector<double> lumped_mass;
  std::vector<Vec2> weighted_normals;
  CyclicTridiagonal stiffness;
};

/// Dense interaction matrix of the nonlocal forcing:
/// off-diagonal (j,k): [w_j.(v_k - v_j)] [w_k.(v_k - v_j)] / |v_k - v_j|^3
/// with w the vertex-weighted normals; diagonal zero. Symmetric by
/// construction. Throws CoincidentVertices when |v_k - v_j| < 1e-14.
DenseMatrix assemble_interaction(const PolygonalCurve& c);

std::vector<double> assemble_lumped_mass(const PolygonalCurve& c);
std::vector<Vec2> assemble_weighted_normals(const PolygonalCurve& c);
CyclicTridiagonal assemble_stiffness(const PolygonalCurve& c);
SchemeMatrices assemble(const PolygonalCurve& c);

/// The 3n x 3n block system for the unknowns (kappa, gamma) of one step:
///   [ (tau/pi) M + (tau/2pi) L    W^T ] [kappa]   [W^T gamma^m]
///   [ W                           -A  ] [gamma] = [0          ]
/// where W maps kappa to the stacked vertex vectors (kappa_j w_j). Unknown
/// ordering: kappa_0..kappa_{n-1}, then x_0,y_0,..,x_{n-1},y_{n-1}.
DenseSystem build_block_system(const PolygonalCurve& c, double tau);

/// Vertex curvature from the discrete Frenet identity: the per-vertex
/// least-squares fit of kappa_j w_j = (A gamma)_j, i.e. w_j.(A gamma)_j / |w_j|^2.
std::vector<double> discrete_curvature(const PolygonalCurve& c);

struct SimulationState {
  PolygonalCurve curve;
  std::vector<double> curvature;
  int step = 0;
  double time = 0.0;
};

SimulationState initial_state(PolygonalCurve curve);

struct StepReport {
  double max_displacement = 0.0;  // max_j |gamma_j^{m+1} - gamma_j^m|
  double linear_residual = 0.0;   // relative residual of the block solve
  double min_edge_after = 0.0;
};

/// Mesh-health floors checked after each step; zero disables a check.
struct StepLimits {
  double min_edge = 0.0;
  double min_chord_arc = 0.0;
};

/// One semi-implicit step of size tau. Throws SolveFailed (or subclasses) when
/// the linear solve is unacceptable and MeshDegenerate when the stepped curve
/// violates its invariants or a limit.
std::pair<SimulationState, StepReport> step(const SimulationState& state, double tau,
                                            const StepLimits& limits = {});

struct SimConfig {
  CurveDescriptor initial = BolaParams{};
  int n = 200;
  double tau = 1e-2;
  int steps = 1500;
  int snapshot_every = 100;
  std::string output_dir = "out";
  double min_edge_factor = 0.05;  // abort when min edge < factor * initial mean edge
  double chord_arc_min = 0.05;

  void validate() const;  // throws InvalidParameters
};

struct RunCallbacks {
  /// Called once for the initial state (zero report) and after every step.
  std::function<void(const SimulationState&, const StepReport&)> on_step;
  /// Called for the initial state, every snapshot_every steps, and the final state.
  std::function<void(const SimulationState&)> on_snapshot;
};

enum class RunStatus { completed, mesh_degenerate, solve_failed };

struct RunResult {
  SimulationState final_state;
  RunStatus status = RunStatus::completed;
  int halt_step = -1;       // step that failed, -1 when completed
  std::string message;
};

/// Runs steps 0..steps-1 from the configured initial curve. Mesh degeneracy
/// and solve failures halt the run and are reported in the result (with the
/// failing step index), not thrown; configuration errors throw.
RunResult run(const SimConfig& config, const RunCallbacks& callbacks = {});

}  // namespace langmuir
