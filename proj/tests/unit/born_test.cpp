#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "property.hpp"
#include "qcalc/born.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/stats.hpp"

namespace qcalc {
namespace {

using testing::for_all;
using testing::random_pair;
using testing::rel_diff;

constexpr std::size_t kMillion = 1'000'000;

TEST(MeanRateClosedTest, Values) {
  EXPECT_NEAR(mean_rate_closed(2.0), 2.0, 2e-12);
  EXPECT_NEAR(mean_rate_closed(0.0), 1.0, 1e-12);
  EXPECT_NEAR(mean_rate_closed(4.0), 6.0, 6e-12);
  // Gamma(2) / Gamma(3/2)^2 = 1 / (sqrt(pi)/2)^2.
  EXPECT_NEAR(mean_rate_closed(1.0), 4.0 / std::numbers::pi, 1e-12);
  // Gamma(7) / Gamma(4)^2 = 720 / 36.
  EXPECT_NEAR(mean_rate_closed(6.0), 20.0, 20e-12);
  EXPECT_THROW((void)mean_rate_closed(-1.0), DomainError);
  EXPECT_THROW((void)mean_rate_closed(-3.0), DomainError);
}

TEST(MeanRateClosedTest, IncreasingOnBracket) {
  double prev = mean_rate_closed(0.0);
  for (double a = 0.05; a <= 8.0; a += 0.05) {
    const double next = mean_rate_closed(a);
    EXPECT_GT(next, prev) << "alpha " << a;
    prev = next;
  }
}

TEST(MeanRateMcTest, BornExponentGivesTwo) {
  const McEstimate mc = mean_rate_mc(2.0, kMillion, 1);
  EXPECT_EQ(mc.samples, kMillion);
  EXPECT_LE(std::abs(mc.estimate - 2.0), 4.0 * mc.std_error);
  EXPECT_LE(std::abs(mc.estimate - 2.0), 0.003);
}

TEST(MeanRateMcTest, ZeroExponentIsExact) {
  const McEstimate mc = mean_rate_mc(0.0, 1000, 7);
  EXPECT_EQ(mc.estimate, 1.0);
  EXPECT_EQ(mc.std_error, 0.0);
}

TEST(MeanRateMcTest, UnitExponent) {
  const McEstimate mc = mean_rate_mc(1.0, kMillion, 2);
  EXPECT_LE(std::abs(mc.estimate - 4.0 / std::numbers::pi), 4.0 * mc.std_error);
}

TEST(MeanRateMcTest, AgreesWithClosedForm) {
  for (double alpha : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const McEstimate mc = mean_rate_mc(alpha, kMillion, 3);
    EXPECT_LE(std::abs(mc.estimate - mean_rate_closed(alpha)), 4.0 * mc.std_error) << "alpha " << alpha;
  }
}

TEST(MeanRateMcTest, ThreadCountDoesNotChangeResult) {
  const McEstimate one = mean_rate_mc(2.0, 300'000, 9, 1);
  const McEstimate four = mean_rate_mc(2.0, 300'000, 9, 4);
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.std_error, four.std_error);
}

TEST(MeanRateMcTest, SeedIsReproducibleAndMatters) {
  EXPECT_EQ(mean_rate_mc(3.0, 1000, 5).estimate, mean_rate_mc(3.0, 1000, 5).estimate);
  EXPECT_NE(mean_rate_mc(3.0, 1000, 5).estimate, mean_rate_mc(3.0, 1000, 6).estimate);
  EXPECT_THROW((void)mean_rate_mc(2.0, 0, 1), DomainError);
}

TEST(SolveAlphaTest, Roots) {
  EXPECT_NEAR(solve_alpha(), 2.0, 1e-8);
  EXPECT_NEAR(solve_alpha(2.0), 2.0, 1e-8);
  EXPECT_NEAR(solve_alpha(1.0), 0.0, 1e-8);
  EXPECT_NEAR(solve_alpha(6.0), 4.0, 1e-8);
  EXPECT_NEAR(mean_rate_closed(solve_alpha(3.7)), 3.7, 1e-10);
}

TEST(SolveAlphaTest, OutOfRangeTargets) {
  EXPECT_THROW((void)solve_alpha(0.5), DomainError);
  EXPECT_THROW((void)solve_alpha(1e4), DomainError);
}

TEST(BornTest, Values) {
  EXPECT_EQ(born({3, 4}), 25.0);
  EXPECT_EQ(born({0, 0}), 0.0);
  static_assert(born(Pair{1, 1}) == 2.0);
}

TEST(BornTest, CoherentSumIsNotAdditive) {
  EXPECT_EQ(born(Pair{1, 0} + Pair{1, 0}), 4.0);
  EXPECT_NE(born(Pair{1, 0} + Pair{1, 0}), born({1, 0}) + born({1, 0}));
  for_all(200, 70, [](Rng& rng) {
    const double theta = rng.phase(), r1 = rng.uniform(0.1, 3.0), r2 = rng.uniform(0.1, 3.0);
    const Pair x1 = scale(unit_phasor(theta), r1);
    const Pair x2 = scale(unit_phasor(theta + std::numbers::pi / 2), r2);
    EXPECT_LE(rel_diff(born(x1 + x2), born(x1) + born(x2)), 1e-12);
  });
}

TEST(BornTest, MultiplicativeUnderCmul) {
  for_all(1000, 71, [](Rng& rng) {
    const Pair u = random_pair(rng), v = random_pair(rng);
    EXPECT_LE(rel_diff(born(cmul(u, v)), born(u) * born(v)), 1e-12);
  });
}

TEST(BornTest, TwoUnitSourcesAverageToTwo) {
  Rng rng(72);
  RunningStats stats;
  for (std::size_t n = 0; n < kMillion; ++n) {
    const PhaseSample s = PhaseSample::draw(rng);
    stats.add(born(unit_phasor(s.theta) + unit_phasor(s.phi)));
  }
  EXPECT_LE(std::abs(stats.mean() - 2.0), 4.0 * stats.std_error());
}

TEST(PhaseSampleTest, AnglesInRange) {
  Rng rng(73);
  for (int n = 0; n < 10000; ++n) {
    const PhaseSample s = PhaseSample::draw(rng);
    EXPECT_GE(s.theta, 0.0);
    EXPECT_LT(s.theta, 2.0 * std::numbers::pi);
    EXPECT_GE(s.phi, 0.0);
    EXPECT_LT(s.phi, 2.0 * std::numbers::pi);
  }
}

TEST(RateModelTest, RejectsNonPositive) {
  EXPECT_THROW(RateModel(0.0), DomainError);
  EXPECT_THROW(RateModel(-1.0), DomainError);
  EXPECT_THROW(RateModel(std::nan("")), DomainError);
  EXPECT_EQ(RateModel(2.5).rate(), 2.5);
}

TEST(SamplePriorTest, MeanRate) {
  const auto xs = sample_prior(RateModel(1.0), kMillion, 80);
  ASSERT_EQ(xs.size(), kMillion);
  RunningStats stats;
  for (const Pair& x : xs) stats.add(born(x));
  EXPECT_LE(std::abs(stats.mean() - 1.0), 0.004);
}

TEST(SamplePriorTest, PhasesAreUniform) {
  const auto xs = sample_prior(RateModel(1.0), kMillion, 81);
  std::vector<double> phases;
  phases.reserve(xs.size());
  for (const Pair& x : xs) phases.push_back(polar(NormalForm::Elliptic, x).phase);
  EXPECT_LE(ks_distance_uniform(phases, 0.0, 2.0 * std::numbers::pi), ks_critical_value(xs.size(), 0.01));
}

TEST(SamplePriorTest, BornWeightVariance) {
  const auto xs = sample_prior(RateModel(4.0), kMillion, 82);
  RunningStats stats;
  for (const Pair& x : xs) stats.add(born(x));
  EXPECT_NEAR(stats.variance(), 16.0, 0.05 * 16.0);
  EXPECT_NEAR(stats.mean(), 4.0, 4.0 * stats.std_error());
}

TEST(SamplePriorTest, BornWeightIsExponential) {
  // P(p > t) = exp(-t / r): compare empirical tail fractions.
  const double r = 2.0;
  const auto xs = sample_prior(RateModel(r), 200'000, 83);
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double frac = static_cast<double>(std::count_if(xs.begin(), xs.end(),
                                                          [&](Pair x) { return born(x) > t; })) /
                        static_cast<double>(xs.size());
    const double expected = std::exp(-t / r);
    const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(xs.size()));
    EXPECT_LE(std::abs(frac - expected), 4.0 * sigma) << "t = " << t;
  }
}

TEST(SamplePriorTest, ThreadCountDoesNotChangeDraws) {
  EXPECT_EQ(sample_prior(RateModel(1.0), 150'000, 84, 1), sample_prior(RateModel(1.0), 150'000, 84, 3));
  EXPECT_THROW((void)sample_prior(RateModel(1.0), 0, 1), DomainError);
}

TEST(SamplePriorPropertyTest, InfinitelyDivisible) {
  const double r = 2.0;
  const std::size_t n = 200'000;
  const auto whole = sample_prior(RateModel(r), n, 90);
  RunningStats whole_c1, whole_born;
  for (const Pair& x : whole) {
    whole_c1.add(x.c1);
    whole_born.add(born(x));
  }
  for (std::size_t k : {2u, 4u, 16u}) {
    std::vector<Pair> sum(n);
    for (std::size_t part = 0; part < k; ++part) {
      const auto xs = sample_prior(RateModel(r / static_cast<double>(k)), n, derive_seed(91 + k, part));
      for (std::size_t i = 0; i < n; ++i) sum[i] = sum[i] + xs[i];
    }
    RunningStats c1, c1_sq;
    for (const Pair& x : sum) {
      c1.add(x.c1);
      c1_sq.add(x.c1 * x.c1);
    }
    // First moment 0, second moment r/2 per component.
    EXPECT_LE(std::abs(c1.mean()), 4.0 * c1.std_error()) << "k = " << k;
    EXPECT_LE(std::abs(c1_sq.mean() - r / 2.0), 4.0 * c1_sq.std_error()) << "k = " << k;
    EXPECT_LE(std::abs(c1.variance() - whole_c1.variance()),
              4.0 * std::sqrt(2.0) * (r / 2.0) * std::sqrt(2.0 / static_cast<double>(n)))
        << "k = " << k;
  }
}

TEST(PoissonStreamTest, CountMatchesRate) {
  const auto times = poisson_stream(RateModel(3.0), 1000.0, 100);
  EXPECT_LE(std::abs(static_cast<double>(times.size()) - 3000.0), 4.0 * std::sqrt(3000.0));
}

TEST(PoissonStreamTest, SortedWithinDurationAndExponentialGaps) {
  const double r = 5.0;
  const auto times = poisson_stream(RateModel(r), 2000.0, 101);
  ASSERT_FALSE(times.empty());
  EXPECT_TRUE(std::is_sorted(times.begin(), times.end()));
  EXPECT_GE(times.front(), 0.0);
  EXPECT_LT(times.back(), 2000.0);
  RunningStats gaps;
  for (std::size_t i = 1; i < times.size(); ++i) gaps.add(times[i] - times[i - 1]);
  EXPECT_LE(std::abs(gaps.mean() - 1.0 / r), 4.0 * gaps.std_error());
}

TEST(PoissonStreamTest, ShortDurationMayBeEmpty) {
  bool saw_empty = false;
  for (Seed s = 0; s < 50 && !saw_empty; ++s) {
    saw_empty = poisson_stream(RateModel(1.0), 1e-3, s).empty();
  }
  EXPECT_TRUE(saw_empty);
  EXPECT_THROW((void)poisson_stream(RateModel(1.0), 0.0, 1), DomainError);
}

}  // namespace
}  // namespace qcalc
