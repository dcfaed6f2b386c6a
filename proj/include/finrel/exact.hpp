#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "finrel/types.hpp"

namespace finrel {

using Rational = boost::multiprecision::cpp_rational;

// Largest n accepted by confidence_infinite_exact.
inline constexpr Count kExactMaxSamples = 1000;

// confidence_infinite evaluated in exact rational arithmetic with integer
// binomial coefficients. Reference for tests; not meant for production sizes.
// Throws DomainError for invalid evidence or r outside [0,1], and
// UnsupportedSizeError when n > kExactMaxSamples.
Rational confidence_infinite_exact(const TestEvidence& ev, const Rational& r);

}  // namespace finrel
