#pragma once

#include "finrel/types.hpp"

namespace finrel {

// Absolute tolerance and iteration cap shared by the bisection solvers.
inline constexpr double kSolverTolerance = 1e-10;
inline constexpr int kSolverMaxIterations = 200;

// Minimum reliability r demonstrated at confidence c: the root of
// confidence_infinite(ev, r) = c on (0,1), found by bisection.
//
// Throws NoSolutionError when f == n and BoundaryError when c is 0 or 1.
Probability reliability_infinite(const TestEvidence& ev, Probability c);

// Assurance for an unbounded population: the fixed point a = confidence_infinite(ev, a).
// Throws NoSolutionError when f == n.
Probability assurance_infinite(const TestEvidence& ev);

}  // namespace finrel
