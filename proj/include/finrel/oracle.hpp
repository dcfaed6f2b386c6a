#pragma once

#include <cstdint>
#include <vector>

#include "finrel/types.hpp"

namespace finrel {

struct SimulationConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  Probability true_reliability{0.5};
  // 0 picks std::thread::hardware_concurrency(). Never affects the estimate.
  unsigned workers = 0;

  void validate() const;
};

struct TailEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

// Monte Carlo estimate of P(at most f failures in n Bernoulli trials) when
// each trial succeeds with cfg.true_reliability, i.e. 1 - confidence_infinite.
//
// Trial t draws from a SplitMix64 stream keyed by (seed, t), so the result
// depends only on (seed, trials) and not on how trials are split over workers.
TailEstimate simulate_tail_probability(const TestEvidence& shape, const SimulationConfig& cfg);

inline constexpr Count kEnumerationMaxAdditional = 10'000;

// Brute-force assurance over every d in 0..m built only from confidence_infinite
// and plain min/max. Test reference for assurance_finite.
// Throws UnsupportedSizeError when m > kEnumerationMaxAdditional.
AssuranceResult enumerate_assurance_oracle(const FinitePlan& plan);

}  // namespace finrel

namespace finrel {

// One Monte Carlo coverage check: does the simulated tail bracket the analytic
// 1 - confidence_infinite within `bands` standard errors?
struct CoverageProbe {
  TestEvidence evidence;
  double reliability = 0.5;
};

struct CoverageOutcome {
  CoverageProbe probe;
  TailEstimate estimate;
  double analytic = 0.0;
  double bands = 3.0;
  bool passed = false;
};

// Ten fixed configurations spanning small and large n, zero and several failures.
std::vector<CoverageProbe> default_coverage_probes();

CoverageOutcome check_coverage(const CoverageProbe& probe, std::uint64_t trials, std::uint64_t seed,
                               double bands = 3.0);

}  // namespace finrel
