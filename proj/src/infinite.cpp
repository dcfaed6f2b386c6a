#include "finrel/infinite.hpp"

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"

namespace finrel {
namespace {

// Root of a strictly decreasing g on [0,1] with g(0) > 0 > g(1).
template <typename Fn>
double bisect_decreasing(Fn&& g) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kSolverMaxIterations && hi - lo > kSolverTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_solvable(const TestEvidence& ev, const char* what) {
  ev.validate();
  if (ev.all_failed()) {
    throw NoSolutionError(std::string(what) + " undefined when every sample failed (" + describe(ev) + ")");
  }
}

}  // namespace

Probability reliability_infinite(const TestEvidence& ev, Probability c) {
  require_solvable(ev, "reliability");
  if (c.value() == 0.0 || c.value() == 1.0) {
    throw BoundaryError("confidence must lie strictly inside (0,1) for reliability inversion");
  }
  const double target = c.value();
  return Probability::clamped(
      bisect_decreasing([&](double r) { return confidence_infinite(ev, Probability(r)).value() - target; }));
}

Probability assurance_infinite(const TestEvidence& ev) {
  require_solvable(ev, "assurance");
  return Probability::clamped(
      bisect_decreasing([&](double a) { return confidence_infinite(ev, Probability(a)).value() - a; }));
}

}  // namespace finrel
