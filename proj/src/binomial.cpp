#include "finrel/binomial.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/binomial.hpp>

namespace finrel {
namespace {

// sum_{k=0}^{k_max} C(n,k) other^k lead^(n-k), with lead + other = 1 and both > 0.
// Callers keep k_max at or below the mean n*other, so terms grow with k: start
// from the largest term and walk down until the rest cannot change the sum.
double binomial_sum(Count n, Count k_max, double lead, double other) {
  const boost::math::binomial_distribution<double> dist(static_cast<double>(n), other);
  double term = boost::math::pdf(dist, static_cast<double>(k_max));
  double sum = term;
  const double ratio = lead / other;
  for (Count k = k_max; k > 0; --k) {
    term *= static_cast<double>(k) / static_cast<double>(n - k + 1) * ratio;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

bool above_mean_failures(const TestEvidence& ev, double q) { return static_cast<double>(ev.f) > static_cast<double>(ev.n) * q; }

}  // namespace

double binomial_lower_tail(const TestEvidence& ev, Probability r) {
  ev.validate();
  const double rel = r.value();
  if (ev.all_failed()) return 1.0;
  if (rel == 0.0) return 0.0;  // only k = n carries mass and k <= f < n
  if (rel == 1.0) return 1.0;  // only k = 0 carries mass

  const double q = 1.0 - rel;
  if (above_mean_failures(ev, q)) {
    // Bulk of the mass lies at or below f: sum the small upper tail instead.
    return std::clamp(1.0 - binomial_sum(ev.n, ev.n - ev.f - 1, q, rel), 0.0, 1.0);
  }
  return std::clamp(binomial_sum(ev.n, ev.f, rel, q), 0.0, 1.0);
}

Probability confidence_infinite(const TestEvidence& ev, Probability r) {
  ev.validate();
  const double rel = r.value();
  if (ev.all_failed()) return Probability(0.0);
  if (rel == 0.0) return Probability(1.0);
  if (rel == 1.0) return Probability(0.0);

  // The upper tail P(X > f), X ~ Bin(n, 1-r), read as Y = n - X ~ Bin(n, r) <= n-f-1.
  const double q = 1.0 - rel;
  if (above_mean_failures(ev, q)) return Probability::clamped(binomial_sum(ev.n, ev.n - ev.f - 1, q, rel));
  return Probability::clamped(1.0 - binomial_sum(ev.n, ev.f, rel, q));
}

}  // namespace finrel
