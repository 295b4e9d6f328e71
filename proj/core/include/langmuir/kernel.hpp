#pragma once

#include <span>

#include "langmuir/vec2.hpp"

namespace langmuir {

/// 2x2 real tensor.
struct Tensor2 {
  double xx = 0.0, xy = 0.0;
  double yx = 0.0, yy = 0.0;

  Vec2 apply(Vec2 v) const { return {xx * v.x + xy * v.y, yx * v.x + yy * v.y}; }
  double trace() const { return xx + yy; }
  double det() const { return xx * yy - xy * yx; }
};

/// One quadrature sample of a smooth closed curve: position, unit outward
/// normal, geometric curvature, and arclength quadrature weight.
struct SmoothCurveSample {
  Vec2 position;
  Vec2 unit_outward_normal;
  double curvature = 0.0;
  double arc_weight = 0.0;
};

/// Fundamental solution tensor x (x) x / (2 pi |x|^3): symmetric, rank one,
/// homogeneous of degree -1, trace 1/(2 pi |x|).
Tensor2 fundamental_solution(Vec2 x);

/// (nu(z).(z-y)) (nu(y).(z-y)) / |z-y|^3. Symmetric in its arguments; on a
/// circle of radius R at angular separation phi this equals -|sin(phi/2)|/(2R).
double interaction_kernel(const SmoothCurveSample& z, const SmoothCurveSample& y);

/// Velocity field off the curve: -sum_i E(x - y_i) nu_i kappa_i w_i.
/// Throws TooCloseToCurve when min_i |x - y_i| < 2 max_i w_i, where the
/// midpoint-rule quadrature is unreliable.
Vec2 off_curve_velocity(std::span<const SmoothCurveSample> samples, Vec2 x);

/// One-sided normal limit of the velocity field at sample `at_index`:
/// -(1/pi) kappa nu - sum_{i != at} E(z - y_i) nu_i kappa_i w_i.
/// The interior and exterior limits coincide; the self term is dropped since
/// the kernel vanishes at coincidence on C^2 curves. Requires >= 16 samples.
Vec2 normal_limit_velocity(std::span<const SmoothCurveSample> samples,
                           std::size_t at_index);

/// Normal velocity of a circle of radius R: identically zero (the local
/// curvature term cancels the nonlocal integral exactly).
double circle_normal_velocity_oracle(double radius);

}  // namespace langmuir
