#pragma once

#include <cstdint>
#include <string>

namespace finrel {

using Count = std::int64_t;

// A value in [0,1]. Used for reliability, confidence and assurance alike.
class Probability {
 public:
  // Throws DomainError when value is NaN or outside [0,1].
  explicit Probability(double value);

  [[nodiscard]] double value() const noexcept { return value_; }

  // Clamps into [0,1] instead of throwing. For results that may carry round-off.
  [[nodiscard]] static Probability clamped(double value) noexcept;

  friend bool operator==(Probability, Probability) = default;
  friend auto operator<=>(Probability, Probability) = default;

 private:
  struct Unchecked {};
  Probability(double value, Unchecked) noexcept : value_(value) {}

  double value_;
};

// Observed campaign: f failures among n tested samples.
struct TestEvidence {
  Count n = 1;
  Count f = 0;

  // Throws DomainError unless n >= 1 and 0 <= f <= n.
  void validate() const;
  [[nodiscard]] bool all_failed() const noexcept { return f == n; }
};

// Evidence plus m further units that will ever be produced; population n + m.
struct FinitePlan {
  TestEvidence evidence;
  Count m = 1;

  void validate() const;
};

// One discrete outcome: d failures among the m additional samples.
struct ReliabilityStep {
  Count d = 0;
  // Reliability the additional samples must show: 1 - d/m, or 1 - 1/(m+1) for d = 0.
  double step_reliability = 0.0;
  // Failure-free fraction of the whole population at this step.
  double overall_reliability = 0.0;
  double confidence = 0.0;
};

struct AssuranceResult {
  double assurance = 0.0;
  Count achieved_at_d = 0;
  double reliability_at = 0.0;
  double confidence_at = 0.0;
};

std::string describe(const TestEvidence& ev);
std::string describe(const FinitePlan& plan);

}  // namespace finrel
