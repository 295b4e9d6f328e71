#include "langmuir/kernel.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "langmuir/errors.hpp"

namespace langmuir {

namespace {
constexpr double kSingularDistance = 1e-14;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Tensor2 fundamental_solution(Vec2 x) {
  const double r = norm(x);
  if (r < kSingularDistance) {
    throw SingularPoint("fundamental solution evaluated at |x| = " + std::to_string(r));
  }
  const double scale = 1.0 / (kTwoPi * r * r * r);
  return {x.x * x.x * scale, x.x * x.y * scale,
          x.y * x.x * scale, x.y * x.y * scale};
}

double interaction_kernel(const SmoothCurveSample& z, const SmoothCurveSample& y) {
  const Vec2 d = z.position - y.position;
  const double r = norm(d);
  if (r < kSingularDistance) {
    throw CoincidentPoints("interaction kernel at coincident sample positions");
  }
  return dot(z.unit_outward_normal, d) * dot(y.unit_outward_normal, d) / (r * r * r);
}

Vec2 off_curve_velocity(std::span<const SmoothCurveSample> samples, Vec2 x) {
  double min_dist_sq = std::numeric_limits<double>::infinity();
  double max_weight = 0.0;
  for (const SmoothCurveSample& s : samples) {
    min_dist_sq = std::min(min_dist_sq, norm_sq(x - s.position));
    max_weight = std::max(max_weight, s.arc_weight);
  }
  const double min_dist = std::sqrt(min_dist_sq);
  if (min_dist < 2.0 * max_weight) {
    throw TooCloseToCurve("evaluation point at distance " + std::to_string(min_dist) +
                          " from the curve; quadrature resolves " +
                          std::to_string(2.0 * max_weight));
  }
  Vec2 u{};
  for (const SmoothCurveSample& s : samples) {
    const Vec2 d = x - s.position;
    const double r2 = norm_sq(d);
    const double r = std::sqrt(r2);
    // E(d) nu = d (d.nu) / (2 pi r^3)
    const double coeff =
        dot(d, s.unit_outward_normal) * s.curvature * s.arc_weight / (kTwoPi * r2 * r);
    u -= coeff * d;
  }
  return u;
}

Vec2 normal_limit_velocity(std::span<const SmoothCurveSample> samples,
                           std::size_t at_index) {
  assert(samples.size() >= 16 && "samples must resolve the curve");
  assert(at_index < samples.size());
  const SmoothCurveSample& z = samples[at_index];
  Vec2 u = (-z.curvature / std::numbers::pi) * z.unit_outward_normal;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i == at_index) continue;  // removable singularity: kernel -> 0 at coincidence
    const SmoothCurveSample& s = samples[i];
    const Vec2 d = z.position - s.position;
    const double r2 = norm_sq(d);
    const double r = std::sqrt(r2);
    const double coeff =
        dot(d, s.unit_outward_normal) * s.curvature * s.arc_weight / (kTwoPi * r2 * r);
    u -= coeff * d;
  }
  return u;
}

double circle_normal_velocity_oracle(double radius) {
  if (!(radius > 0.0)) {
    throw NonpositiveRadius("circle radius must be positive, got " +
                            std::to_string(radius));
  }
  // U = -1/(pi R) + (1/(4 pi R)) * int_0^{2pi} |sin(phi/2)| dphi = 0.
  return 0.0;
}

}  // namespace langmuir
