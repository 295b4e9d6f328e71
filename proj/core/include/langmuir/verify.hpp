#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace langmuir {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and the tolerance they were held to
};

// Matrix identities fuzzed over random star polygons: L symmetric with zero
// diagonal, weighted normals sum to zero, stiffness annihilates constants,
// lumped mass sums to the total length.
std::vector<CheckResult> check_exact_identities();

// Interaction kernel on circles against the closed form -|sin(phi/2)|/(2R).
std::vector<CheckResult> check_circle_kernel_oracle();

// One scheme step on regular polygons of radius 1: displacement rate decays
// at second order under refinement.
std::vector<CheckResult> check_circle_equilibrium();

// Off-curve velocity approaches the normal-limit formula from both sides of
// circle and 2:1 ellipse, interior and exterior limits agreeing.
std::vector<CheckResult> check_normal_limit_matching();

// Far field of the dumbbell curve decays with log-log slope -2.
std::vector<CheckResult> check_dipole_decay();

// Solved curvature on regular polygons converges to 1/R at second order.
std::vector<CheckResult> check_curvature_consistency();

// The reference dumbbell evolution (n=200, tau=1e-2, 1500 steps) plus the
// refined comparison run: length monotone, bounded area drift that shrinks
// under refinement, round final shape, healthy mesh, bounded wall time, and
// the solver residual gate on every step.
std::vector<CheckResult> check_reference_run();

enum class VerifySuite { kernel, scheme, convergence, all };

VerifySuite parse_suite(const std::string& name);  // throws InvalidParameters

/// Runs a suite, streaming one "[PASS]/[FAIL] name: detail" line per check to
/// `log` when given. Returns all results.
std::vector<CheckResult> run_suite(VerifySuite suite, std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace langmuir
