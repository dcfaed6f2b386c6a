#include "finrel/exact.hpp"

#include "finrel/errors.hpp"

namespace finrel {

using boost::multiprecision::cpp_int;

Rational confidence_infinite_exact(const TestEvidence& ev, const Rational& r) {
  ev.validate();
  if (r < 0 || r > 1) throw DomainError("exact probability must lie in [0,1]");
  if (ev.n > kExactMaxSamples) {
    throw UnsupportedSizeError("exact evaluation limited to n <= " + std::to_string(kExactMaxSamples) +
                               ", got n=" + std::to_string(ev.n));
  }

  const Rational q = 1 - r;
  Rational sum = 0;
  cpp_int binom = 1;  // C(n, k)
  for (Count k = 0; k <= ev.f; ++k) {
    Rational term = Rational(binom);
    for (Count i = 0; i < k; ++i) term *= q;
    for (Count i = 0; i < ev.n - k; ++i) term *= r;
    sum += term;
    binom = binom * (ev.n - k) / (k + 1);
  }
  return 1 - sum;
}

}  // namespace finrel
