#pragma once

#include <stdexcept>
#include <string>

namespace langmuir {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge of a polygonal curve has zero length.
struct DegenerateEdge : Error {
  using Error::Error;
};

// Two non-adjacent vertices are numerically coincident (interaction matrix).
struct CoincidentVertices : Error {
  using Error::Error;
};

// Two curve samples share a position (interaction kernel).
struct CoincidentPoints : Error {
  using Error::Error;
};

// Fundamental solution requested at (numerically) zero separation.
struct SingularPoint : Error {
  using Error::Error;
};

// Off-curve evaluation point too close to the curve for reliable quadrature.
struct TooCloseToCurve : Error {
  using Error::Error;
};

struct NonpositiveRadius : Error {
  using Error::Error;
};

struct InvalidParameters : Error {
  using Error::Error;
};

// Sampling an analytic curve produced an invalid polygon.
struct SelfIntersectingSample : Error {
  using Error::Error;
};

// Malformed input file (carries a line number in the message).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a curve invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Linear solve could not produce an acceptable solution.
struct SolveFailed : Error {
  using Error::Error;
};

struct SingularMatrix : SolveFailed {
  using SolveFailed::SolveFailed;
};

struct ResidualTooLarge : SolveFailed {
  using SolveFailed::SolveFailed;
};

// Mesh-health threshold tripped during time stepping.
struct MeshDegenerate : Error {
  using Error::Error;
};

struct InsufficientSamples : Error {
  using Error::Error;
};

}  // namespace langmuir
