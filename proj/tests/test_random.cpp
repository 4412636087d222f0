#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "setsketch/random.hpp"
#include "test_util.hpp"

using namespace setsketch;

TEST(RandomStream, SameSeedSameOutputs) {
  RandomStream a = stream_from_seed(42), b = stream_from_seed(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_uniform(), b.next_uniform());
}

TEST(RandomStream, DifferentSeedsDiffer) {
  EXPECT_NE(stream_from_seed(42).next_u64(), stream_from_seed(43).next_u64());
}

TEST(RandomStream, SeedsOffsetByIncrementDoNotShareStream) {
  RandomStream a(1), b(1 + 0xa0761d6478bd642fULL);
  a.next_u64();
  EXPECT_NE(a.next_u64(), b.next_u64());
}

TEST(RandomStream, CountsConsumedWords) {
  RandomStream s(7);
  s.next_u64();
  s.next_uniform();
  s.next_exponential(2.);
  EXPECT_EQ(s.words_consumed(), 3u);
}

TEST(RandomStream, TopByteIsEquidistributed) {
  RandomStream s(2024);
  std::vector<std::uint64_t> buckets(256);
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) ++buckets[s.next_u64() >> 56];
  EXPECT_LT(test_util::chi_square(buckets, n / 256.), test_util::chi_square_critical_001(255));
}

TEST(RandomStream, UniformIsInOpenUnitInterval) {
  RandomStream s(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_uniform();
    ASSERT_GT(u, 0.);
    ASSERT_LT(u, 1.);
  }
}

TEST(RandomStream, ExponentialMeanAndDistribution) {
  RandomStream s(11);
  std::vector<double> draws(1'000'000);
  for (auto& x : draws) {
    x = s.next_exponential(20.);
    ASSERT_GE(x, 0.);
  }
  const double mean = std::accumulate(draws.begin(), draws.end(), 0.) / draws.size();
  EXPECT_NEAR(mean, 0.05, 0.0005);
  EXPECT_LT(test_util::ks_statistic(draws, [](double x) { return -std::expm1(-20 * x); }), 0.002);
}

TEST(RandomStream, ExponentialRejectsNonPositiveRate) {
  RandomStream s(1);
  EXPECT_THROW(s.next_exponential(0.), std::invalid_argument);
  EXPECT_THROW(s.next_exponential(-1.), std::invalid_argument);
}

TEST(RandomStream, UntruncatedExponentialMatchesExponentialCdf) {
  RandomStream s(12);
  std::vector<double> draws(1'000'000);
  const double inf = std::numeric_limits<double>::infinity();
  for (auto& x : draws) x = s.next_truncated_exponential(3., 0., inf);
  EXPECT_LT(test_util::ks_statistic(draws, [](double x) { return -std::expm1(-3 * x); }), 0.002);
}

TEST(RandomStream, TruncatedExponentialMatchesTruncatedCdf) {
  RandomStream s(13);
  const double lo = 0.01, hi = 0.05, rate = 20;
  std::vector<double> draws(1'000'000);
  for (auto& x : draws) {
    x = s.next_truncated_exponential(rate, lo, hi);
    ASSERT_GE(x, lo);
    ASSERT_LT(x, hi);
  }
  const double mass = -std::expm1(-rate * (hi - lo));
  auto cdf = [&](double x) { return -std::expm1(-rate * (x - lo)) / mass; };
  EXPECT_LT(test_util::ks_statistic(draws, cdf), 0.002);
}

TEST(RandomStream, TruncatedExponentialMeanOnFirstInterval) {
  // m = 16, rate 20, [gamma_0, gamma_1); mean from numerical quadrature
  const double gamma1 = std::log1p(1. / 15) / 20;
  const double expected = 0.0015961091468216212;
  RandomStream s(14);
  double sum = 0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) sum += s.next_truncated_exponential(20., 0., gamma1);
  EXPECT_NEAR(sum / n, expected, 0.01 * expected);
}

TEST(RandomStream, TruncatedExponentialStaysBelowUpperBoundForTinyIntervals) {
  RandomStream s(15);
  const double lo = 1.;
  const double hi = std::nextafter(lo, 2.);
  for (int i = 0; i < 1000; ++i) {
    const double x = s.next_truncated_exponential(5., lo, hi);
    ASSERT_GE(x, lo);
    ASSERT_LT(x, hi);
  }
}

TEST(RandomStream, TruncatedExponentialRejectsInvalidIntervals) {
  RandomStream s(1);
  EXPECT_THROW(s.next_truncated_exponential(1., 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(s.next_truncated_exponential(1., 0.6, 0.5), std::invalid_argument);
  EXPECT_THROW(s.next_truncated_exponential(1., -0.1, 0.5), std::invalid_argument);
  EXPECT_THROW(s.next_truncated_exponential(0., 0., 0.5), std::invalid_argument);
}

TEST(RandomStream, IndexMappingIsUnbiased) {
  RandomStream s(16);
  std::vector<std::uint64_t> counts(100);
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) ++counts[s.next_index(100)];
  EXPECT_LT(test_util::chi_square(counts, n / 100.), test_util::chi_square_critical_001(99));
}

TEST(PermutationSampler, SingleRegister) {
  PermutationSampler p(1);
  RandomStream s(5);
  EXPECT_EQ(p.next(s), 0u);
  EXPECT_THROW(p.next(s), std::logic_error);
}

TEST(PermutationSampler, FullDrawIsPermutation) {
  PermutationSampler p(4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream s(seed);
    p.reset();
    std::vector<std::uint32_t> drawn;
    for (int i = 0; i < 4; ++i) drawn.push_back(p.next(s));
    std::sort(drawn.begin(), drawn.end());
    EXPECT_EQ(drawn, (std::vector<std::uint32_t>{0, 1, 2, 3}));
  }
}

TEST(PermutationSampler, ExhaustionThrowsUntilReset) {
  PermutationSampler p(3);
  RandomStream s(1);
  for (int i = 0; i < 3; ++i) p.next(s);
  EXPECT_THROW(p.next(s), std::logic_error);
  p.reset();
  EXPECT_NO_THROW(p.next(s));
}

TEST(PermutationSampler, AllPermutationsOfThreeEquallyLikely) {
  PermutationSampler p(3);
  std::map<std::vector<std::uint32_t>, int> counts;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    RandomStream s(1000 + t);
    p.reset();
    std::vector<std::uint32_t> perm;
    for (int i = 0; i < 3; ++i) perm.push_back(p.next(s));
    ++counts[perm];
  }
  ASSERT_EQ(counts.size(), 6u);
  const double expected = trials / 6.;
  const double sigma = std::sqrt(trials * (1. / 6) * (5. / 6));
  for (const auto& [perm, c] : counts) EXPECT_NEAR(c, expected, 3 * sigma);
}

TEST(PermutationSampler, PrefixesAreUniform) {
  for (std::uint32_t m = 2; m <= 5; ++m) {
    PermutationSampler p(m);
    for (std::uint32_t k = 1; k < m; ++k) {
      std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
      const int trials = 60000;
      for (int t = 0; t < trials; ++t) {
        RandomStream s(t * 31 + m * 7 + k);
        p.reset();
        std::vector<std::uint32_t> prefix;
        for (std::uint32_t i = 0; i < k; ++i) prefix.push_back(p.next(s));
        ++counts[prefix];
      }
      std::uint64_t cells = 1;
      for (std::uint32_t i = 0; i < k; ++i) cells *= m - i;
      ASSERT_EQ(counts.size(), cells);
      std::vector<std::uint64_t> observed;
      for (const auto& [prefix, c] : counts) observed.push_back(c);
      const int df = static_cast<int>(cells) - 1;
      EXPECT_LT(test_util::chi_square(observed, static_cast<double>(trials) / cells),
                test_util::chi_square_critical_001(df))
          << "m=" << m << " k=" << k;
    }
  }
}

TEST(PermutationSampler, ResetManyTimesStaysConsistent) {
  PermutationSampler p(7);
  RandomStream s(9);
  for (int r = 0; r < 10000; ++r) {
    p.reset();
    std::vector<std::uint32_t> drawn;
    for (int i = 0; i < 7; ++i) drawn.push_back(p.next(s));
    std::sort(drawn.begin(), drawn.end());
    for (std::uint32_t i = 0; i < 7; ++i) ASSERT_EQ(drawn[i], i);
  }
}
