#include "finrel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"

namespace finrel {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0,1) with 53 random bits.
double unit_uniform(std::uint64_t& state) { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

bool campaign_passes(Count n, Count f, double reliability, std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t key = seed ^ 0xD1B54A32D192ED03ULL;
  std::uint64_t state = splitmix64(key) ^ (trial * 0x9E3779B97F4A7C15ULL);
  state = splitmix64(state);
  Count failures = 0;
  for (Count i = 0; i < n; ++i) {
    if (!(unit_uniform(state) < reliability) && ++failures > f) return false;
  }
  return true;
}

}  // namespace

void SimulationConfig::validate() const {
  if (trials < 1) throw DomainError("simulation needs at least one trial");
}

TailEstimate simulate_tail_probability(const TestEvidence& shape, const SimulationConfig& cfg) {
  shape.validate();
  cfg.validate();

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

  const double rel = cfg.true_reliability.value();
  std::vector<std::uint64_t> hits(workers, 0);
  auto run_range = [&](unsigned w) {
    const std::uint64_t begin = cfg.trials * w / workers;
    const std::uint64_t end = cfg.trials * (w + 1) / workers;
    std::uint64_t local = 0;
    for (std::uint64_t t = begin; t < end; ++t) local += campaign_passes(shape.n, shape.f, rel, cfg.seed, t) ? 1 : 0;
    hits[w] = local;
  };

  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
  }

  TailEstimate est;
  est.trials = cfg.trials;
  for (auto h : hits) est.hits += h;
  est.probability = static_cast<double>(est.hits) / static_cast<double>(est.trials);
  est.standard_error = std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(est.trials));
  return est;
}

AssuranceResult enumerate_assurance_oracle(const FinitePlan& plan) {
  plan.validate();
  if (plan.m > kEnumerationMaxAdditional) {
    throw UnsupportedSizeError("enumeration limited to m <= " + std::to_string(kEnumerationMaxAdditional));
  }
  const Count n = plan.evidence.n;
  const Count f = plan.evidence.f;
  const Count m = plan.m;
  if (m == 0) {
    const double r = static_cast<double>(n - f) / static_cast<double>(n);
    return {r, 0, r, 1.0};
  }

  // Every outcome as (population reliability, confidence of the reliability the
  // additional units need); a zero-failure outcome is treated as one failure
  // in m+1 additional units.
  std::vector<AssuranceResult> outcomes;
  for (Count failed = 0; failed <= m; ++failed) {
    const Count pop_failures = failed == 0 ? f + 1 : f + failed;
    const Count pop_size = failed == 0 ? n + m + 1 : n + m;
    const Count extra_failures = failed == 0 ? 1 : failed;
    const Count extra_size = failed == 0 ? m + 1 : m;

    const double pop_rel = static_cast<double>(pop_size - pop_failures) / static_cast<double>(pop_size);
    const double needed = static_cast<double>(extra_size - extra_failures) / static_cast<double>(extra_size);
    const double conf = confidence_infinite(plan.evidence, Probability(needed)).value();
    outcomes.push_back({pop_rel < conf ? pop_rel : conf, failed, pop_rel, conf});
  }

  AssuranceResult best = outcomes.front();
  for (const auto& o : outcomes) {
    if (best.assurance < o.assurance) best = o;
  }
  return best;
}

}  // namespace finrel

namespace finrel {

std::vector<CoverageProbe> default_coverage_probes() {
  return {
      {{10, 0}, 0.9},  {{3, 0}, 0.5},  {{1, 1}, 0.3},  {{20, 1}, 0.9},   {{50, 2}, 0.95},
      {{5, 2}, 0.6},   {{30, 0}, 0.97}, {{15, 3}, 0.8}, {{8, 1}, 0.75},   {{100, 5}, 0.96},
  };
}

CoverageOutcome check_coverage(const CoverageProbe& probe, std::uint64_t trials, std::uint64_t seed, double bands) {
  CoverageOutcome out;
  out.probe = probe;
  out.bands = bands;
  const Probability r(probe.reliability);
  out.estimate = simulate_tail_probability(probe.evidence, {trials, seed, r, 0});
  out.analytic = binomial_lower_tail(probe.evidence, r);
  out.passed = std::abs(out.estimate.probability - out.analytic) <= bands * out.estimate.standard_error;
  return out;
}

}  // namespace finrel
