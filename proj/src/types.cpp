#include "finrel/types.hpp"

#include <algorithm>
#include <cmath>

#include "finrel/errors.hpp"

namespace finrel {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability must lie in [0,1], got " + std::to_string(value));
  }
}

Probability Probability::clamped(double value) noexcept {
  if (std::isnan(value)) return Probability(0.0, Unchecked{});
  return Probability(std::clamp(value, 0.0, 1.0), Unchecked{});
}

void TestEvidence::validate() const {
  if (n < 1) throw DomainError("sample count n must be at least 1, got " + std::to_string(n));
  if (f < 0) throw DomainError("failure count f must be non-negative, got " + std::to_string(f));
  if (f > n) throw DomainError("failure count f=" + std::to_string(f) + " exceeds n=" + std::to_string(n));
}

void FinitePlan::validate() const {
  evidence.validate();
  if (m < 0) throw DomainError("additional sample count m must be non-negative, got " + std::to_string(m));
}

std::string describe(const TestEvidence& ev) {
  return "n=" + std::to_string(ev.n) + ", f=" + std::to_string(ev.f);
}

std::string describe(const FinitePlan& plan) {
  return describe(plan.evidence) + ", m=" + std::to_string(plan.m);
}

}  // namespace finrel
