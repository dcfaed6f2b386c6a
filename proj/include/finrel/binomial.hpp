#pragma once

#include "finrel/types.hpp"

namespace finrel {

// Confidence that the true reliability is at least r after observing ev:
//
//   c = 1 - sum_{k=0}^{f} C(n,k) (1-r)^k r^(n-k)
//
// The tail is summed from its largest term outward with the ratio recurrence
// term_{k-1} = term_k * k/(n-k+1) * r/(1-r), stopping once further terms are
// negligible. When f exceeds the mean failure count n(1-r) the upper tail
// k > f is summed instead, so small confidences keep their relative precision.
// Stable for n up to 1e6.
//
// f == n returns exactly 0. The result is clamped into [0,1].
// Throws DomainError for invalid evidence.
Probability confidence_infinite(const TestEvidence& ev, Probability r);

// Lower binomial tail P(X <= f), X ~ Binomial(n, 1 - r). This is 1 - confidence.
double binomial_lower_tail(const TestEvidence& ev, Probability r);

}  // namespace finrel
