#pragma once

#include <vector>

#include "finrel/types.hpp"

namespace finrel {

// Tolerance for recognising r == 1 - f/(n+m) in confidence_finite.
inline constexpr double kBoundaryTolerance = 1e-12;

// A reliability given as an exact ratio num/den, 0 <= num <= den, den >= 1.
struct Ratio {
  Count num = 0;
  Count den = 1;
};

// Reliability required of the m additional samples to keep their failures at d:
// 1 - d/m for d >= 1, and 1 - 1/(m+1) for d = 0 (one failure in m+1 units).
double step_reliability(Count m, Count d);

// Failure-free fraction of the population when d of the m additional units fail:
// 1 - (f+d)/(n+m) for d >= 1. The d = 0 step uses the same one-in-(m+1)
// convention as step_reliability, giving 1 - (f+1)/(n+m+1).
double overall_reliability(const FinitePlan& plan, Count d);

// The m+1 discrete steps d = 0..m in ascending d.
// Throws DegeneratePlanError when m == 0.
std::vector<ReliabilityStep> step_grid(const FinitePlan& plan);

// Confidence that at least a fraction r of the n+m population succeeds.
//
//   r <= 1 - (f+m)/(n+m)           -> 1
//   inside the open range           -> confidence_infinite at 1 - d/m, d the
//                                      smallest in [1,m] with 1 - d/m <= r
//   r == 1 - f/(n+m) (to 1e-12)     -> f > 0: confidence_infinite at 1 - 1/(m+1); f = 0: 0
//   r > 1 - f/(n+m)                 -> 0
//
// m == 0 means the population is fully observed: 1 for r <= 1 - f/n, else 0.
Probability confidence_finite(const FinitePlan& plan, Probability r);

// Same as above with the branch tests done exactly on num/den.
Probability confidence_finite(const FinitePlan& plan, Ratio r);

// Minimum population reliability held with confidence c: scans d = 0..m and
// returns overall_reliability of the first step whose confidence reaches c.
// Falls back to 1 - (f+m)/(n+m) when none does (only possible when f == n).
// m == 0 returns 1 - f/n. Throws BoundaryError when c is 0 or 1.
Probability reliability_finite(const FinitePlan& plan, Probability c);

// Best achievable min(overall reliability, step confidence) over d = 0..m.
// Ties go to the smaller d. m == 0 returns 1 - f/n achieved at d = 0.
AssuranceResult assurance_finite(const FinitePlan& plan);

}  // namespace finrel
