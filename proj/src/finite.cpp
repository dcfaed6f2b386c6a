#include "finrel/finite.hpp"

#include <algorithm>
#include <cmath>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"

namespace finrel {
namespace {

__extension__ typedef __int128 Wide;

double ratio(Count num, Count den) { return static_cast<double>(num) / static_cast<double>(den); }

double step_confidence(const FinitePlan& plan, Count d) {
  return confidence_infinite(plan.evidence, Probability(step_reliability(plan.m, d))).value();
}

double fully_observed_reliability(const TestEvidence& ev) { return ratio(ev.n - ev.f, ev.n); }

// Smallest d in [1,m] with step_reliability(m, d) <= r, using the same
// floating values step_grid reports.
Count select_step(Count m, double r) {
  Count d = static_cast<Count>(std::ceil(static_cast<double>(m) * (1.0 - r)));
  d = std::clamp<Count>(d, 1, m);
  while (d > 1 && step_reliability(m, d - 1) <= r) --d;
  while (d < m && step_reliability(m, d) > r) ++d;
  return d;
}

}  // namespace

double step_reliability(Count m, Count d) {
  if (d == 0) return ratio(m, m + 1);
  return ratio(m - d, m);
}

double overall_reliability(const FinitePlan& plan, Count d) {
  const Count n = plan.evidence.n;
  const Count f = plan.evidence.f;
  if (d == 0) return ratio(n + plan.m - f, n + plan.m + 1);
  return ratio(n + plan.m - f - d, n + plan.m);
}

std::vector<ReliabilityStep> step_grid(const FinitePlan& plan) {
  plan.validate();
  if (plan.m == 0) throw DegeneratePlanError("step grid needs m >= 1 (" + describe(plan) + ")");

  std::vector<ReliabilityStep> steps;
  steps.reserve(static_cast<std::size_t>(plan.m) + 1);
  for (Count d = 0; d <= plan.m; ++d) {
    steps.push_back({d, step_reliability(plan.m, d), overall_reliability(plan, d), step_confidence(plan, d)});
  }
  return steps;
}

Probability confidence_finite(const FinitePlan& plan, Probability r) {
  plan.validate();
  const TestEvidence& ev = plan.evidence;
  const double rel = r.value();

  if (plan.m == 0) return Probability(rel <= fully_observed_reliability(ev) ? 1.0 : 0.0);

  const Count total = ev.n + plan.m;
  const double floor_rel = ratio(ev.n - ev.f, total);
  const double ceiling_rel = ratio(total - ev.f, total);

  if (rel <= floor_rel) return Probability(1.0);
  if (std::abs(rel - ceiling_rel) <= kBoundaryTolerance) {
    return ev.f > 0 ? Probability(step_confidence(plan, 0)) : Probability(0.0);
  }
  if (rel > ceiling_rel) return Probability(0.0);
  return Probability(step_confidence(plan, select_step(plan.m, rel)));
}

Probability confidence_finite(const FinitePlan& plan, Ratio r) {
  plan.validate();
  if (r.den < 1 || r.num < 0 || r.num > r.den) {
    throw DomainError("reliability ratio must satisfy 0 <= num <= den, den >= 1");
  }
  const TestEvidence& ev = plan.evidence;
  const Wide num = r.num;
  const Wide den = r.den;

  if (plan.m == 0) return Probability(num * ev.n <= den * (ev.n - ev.f) ? 1.0 : 0.0);

  const Wide total = ev.n + plan.m;
  const Wide lhs = num * total;  // compare num/den against k/total as num*total vs k*den
  if (lhs <= den * (ev.n - ev.f)) return Probability(1.0);
  if (lhs == den * (total - ev.f)) {
    return ev.f > 0 ? Probability(step_confidence(plan, 0)) : Probability(0.0);
  }
  if (lhs > den * (total - ev.f)) return Probability(0.0);

  // Smallest d with (m-d)/m <= num/den, i.e. d = m - floor(num*m/den).
  const Count d = std::clamp<Count>(plan.m - static_cast<Count>(num * plan.m / den), 1, plan.m);
  return Probability(step_confidence(plan, d));
}

Probability reliability_finite(const FinitePlan& plan, Probability c) {
  plan.validate();
  if (c.value() == 0.0 || c.value() == 1.0) {
    throw BoundaryError("confidence must lie strictly inside (0,1) for reliability inversion");
  }
  if (plan.m == 0) return Probability(fully_observed_reliability(plan.evidence));

  for (Count d = 0; d <= plan.m; ++d) {
    if (step_confidence(plan, d) >= c.value()) return Probability(overall_reliability(plan, d));
  }
  return Probability(ratio(plan.evidence.n - plan.evidence.f, plan.evidence.n + plan.m));
}

AssuranceResult assurance_finite(const FinitePlan& plan) {
  plan.validate();
  if (plan.m == 0) {
    const double rel = fully_observed_reliability(plan.evidence);
    return {std::min(rel, 1.0), 0, rel, 1.0};
  }

  AssuranceResult best{-1.0, 0, 0.0, 0.0};
  for (Count d = 0; d <= plan.m; ++d) {
    const double rel = overall_reliability(plan, d);
    const double conf = step_confidence(plan, d);
    const double a = std::min(rel, conf);
    if (a > best.assurance) best = {a, d, rel, conf};
  }
  return best;
}

}  // namespace finrel
