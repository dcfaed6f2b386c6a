#include <gtest/gtest.h>

#include <cmath>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"
#include "finrel/finite.hpp"
#include "finrel/oracle.hpp"

namespace finrel {
namespace {

TailEstimate simulate(Count n, Count f, double r, std::uint64_t trials, std::uint64_t seed = 42, unsigned workers = 0) {
  return simulate_tail_probability({n, f}, {trials, seed, Probability(r), workers});
}

void expect_brackets(const TailEstimate& est, double analytic) {
  EXPECT_LE(std::abs(est.probability - analytic), 3.0 * est.standard_error)
      << "estimate " << est.probability << " analytic " << analytic << " se " << est.standard_error;
}

TEST(SimulateTail, TenSamplesAtNinety) {
  const auto est = simulate(10, 0, 0.9, 1'000'000);
  expect_brackets(est, std::pow(0.9, 10));
  EXPECT_NEAR(est.probability, 0.3487, 0.002);
}

TEST(SimulateTail, ComplementOfThreeSampleAnchor) { expect_brackets(simulate(3, 0, 0.5, 1'000'000), 0.125); }

TEST(SimulateTail, SingleSampleAllFailuresAllowed) {
  const auto est = simulate(1, 1, 0.3, 10'000);
  EXPECT_EQ(est.probability, 1.0);
  EXPECT_EQ(est.standard_error, 0.0);
  EXPECT_EQ(est.hits, 10'000u);
}

TEST(SimulateTail, EstimatesOneMinusConfidence) {
  const TestEvidence ev{12, 2};
  const auto est = simulate(ev.n, ev.f, 0.8, 400'000);
  expect_brackets(est, 1.0 - confidence_infinite(ev, Probability(0.8)).value());
}

TEST(SimulateTail, ReproducibleUnderFixedSeed) {
  const auto a = simulate(20, 1, 0.9, 200'000, 99);
  const auto b = simulate(20, 1, 0.9, 200'000, 99);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.probability, b.probability);
  EXPECT_NE(simulate(20, 1, 0.9, 200'000, 100).hits, a.hits);
}

TEST(SimulateTail, IndependentOfPartitioning) {
  const auto one = simulate(15, 2, 0.85, 100'003, 7, 1);
  for (unsigned workers : {2u, 3u, 8u, 13u}) EXPECT_EQ(simulate(15, 2, 0.85, 100'003, 7, workers).hits, one.hits) << workers;
}

TEST(SimulateTail, RejectsZeroTrials) { EXPECT_THROW(simulate(3, 0, 0.5, 0), DomainError); }

TEST(EnumerateAssurance, Examples) {
  EXPECT_NEAR(enumerate_assurance_oracle({{3, 0}, 4}).assurance, 0.714, 5e-4);
  EXPECT_NEAR(enumerate_assurance_oracle({{22, 0}, 10}).assurance, 0.938, 5e-4);
  EXPECT_EQ(enumerate_assurance_oracle({{5, 5}, 3}).assurance, 0.0);
}

TEST(EnumerateAssurance, SizeGuard) {
  EXPECT_THROW(enumerate_assurance_oracle({{5, 0}, kEnumerationMaxAdditional + 1}), UnsupportedSizeError);
}

TEST(EnumerateAssurance, AgreesExactlyWithAssuranceFinite) {
  for (Count n = 1; n <= 25; ++n) {
    for (Count f = 0; f <= std::min<Count>(3, n); ++f) {
      for (Count m = 1; m <= 40; ++m) {
        const FinitePlan plan{{n, f}, m};
        const auto lib = assurance_finite(plan);
        const auto ref = enumerate_assurance_oracle(plan);
        ASSERT_EQ(lib.assurance, ref.assurance) << describe(plan);
        EXPECT_EQ(lib.achieved_at_d, ref.achieved_at_d) << describe(plan);
        EXPECT_EQ(lib.reliability_at, ref.reliability_at) << describe(plan);
        EXPECT_EQ(lib.confidence_at, ref.confidence_at) << describe(plan);
      }
    }
  }
}

TEST(CoverageProbes, DefaultSetPasses) {
  const auto probes = default_coverage_probes();
  ASSERT_EQ(probes.size(), 10u);
  for (const auto& p : probes) {
    const auto o = check_coverage(p, 200'000, 1234);
    EXPECT_TRUE(o.passed) << describe(p.evidence) << " r=" << p.reliability << " est=" << o.estimate.probability
                          << " analytic=" << o.analytic;
  }
}

}  // namespace
}  // namespace finrel
