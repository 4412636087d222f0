#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "setsketch/cardinality.hpp"
#include "setsketch/ghll.hpp"
#include "setsketch/minhash.hpp"
#include "setsketch/setsketch.hpp"

using namespace setsketch;

namespace {

const SketchConfig config_b2{256, 2., 20., 62};

RegisterHistogram random_histogram(RandomStream& s, std::uint32_t m, std::uint32_t q, bool allow_extremes) {
  RegisterHistogram h{std::vector<std::uint32_t>(q + 2, 0)};
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t k = allow_extremes ? s.next_index(q + 2) : 1 + s.next_index(q);
    ++h.counts[k];
  }
  return h;
}

}  // namespace

TEST(RawEstimator, ClosedFormValues) {
  // (1 - 1/b) b^k / (a log b)
  EXPECT_NEAR(estimate_cardinality_raw(std::vector<std::uint32_t>(256, 0), config_b2), 0.036067376022224085, 1e-15);
  EXPECT_NEAR(estimate_cardinality_raw(std::vector<std::uint32_t>(256, 10), config_b2), 36.932993046757463, 1e-12);
}

TEST(RawEstimator, PositiveAndFinite) {
  RandomStream s(1);
  for (int t = 0; t < 100; ++t) {
    const RegisterHistogram h = random_histogram(s, 256, 62, true);
    const double n = estimate_cardinality_raw(h, config_b2);
    EXPECT_GT(n, 0.);
    EXPECT_TRUE(std::isfinite(n));
  }
}

TEST(RawEstimator, RegistersAndHistogramAgree) {
  SetSketch s(config_b2, Variant::setsketch1);
  RandomStream e(2);
  for (int i = 0; i < 3000; ++i) s.insert(e.next_u64());
  EXPECT_EQ(estimate_cardinality_raw(s.registers(), s.config()), estimate_cardinality_raw(s.histogram(), s.config()));
}

TEST(RawEstimator, RelativeErrorMatchesTheory) {
  const auto ctx = make_context(config_b2, Variant::setsketch1);
  const int trials = 1000;
  double sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    SetSketch s(ctx);
    RandomStream e(100 + t);
    for (int i = 0; i < 10000; ++i) s.insert(e.next_u64());
    const double err = estimate_cardinality_raw(s.registers(), s.config()) / 10000 - 1;
    sum_sq += err * err;
  }
  const double rmse = std::sqrt(sum_sq / trials);
  const double rsd = 1.0389617614136893 / 16;
  EXPECT_GE(rmse, 0.95 * rsd);
  EXPECT_LE(rmse, 1.15 * rsd);
}

TEST(CorrectedEstimator, ExtremeHistograms) {
  RegisterHistogram empty{std::vector<std::uint32_t>(64, 0)};
  empty.counts[0] = 256;
  EXPECT_EQ(estimate_cardinality_corrected(empty, config_b2), 0.);
  RegisterHistogram full{std::vector<std::uint32_t>(64, 0)};
  full.counts[63] = 256;
  EXPECT_TRUE(std::isinf(estimate_cardinality_corrected(full, config_b2)));
  EXPECT_EQ(estimate_cardinality_corrected(SetSketch(config_b2, Variant::setsketch2).histogram(), config_b2), 0.);
}

TEST(CorrectedEstimator, EqualsRawWithoutExtremeRegisters) {
  RandomStream s(3);
  for (const SketchConfig& c : {config_b2, SketchConfig{64, 1.001, 20., 30000}, SketchConfig{100, 1.5, 0.01, 40}}) {
    for (int t = 0; t < 1000; ++t) {
      const RegisterHistogram h = random_histogram(s, c.m, c.q, false);
      ASSERT_EQ(estimate_cardinality_corrected(h, c), estimate_cardinality_raw(h, c));
    }
  }
}

TEST(CorrectedEstimator, RejectsInconsistentHistogram) {
  RegisterHistogram h{std::vector<std::uint32_t>(64, 0)};
  h.counts[3] = 255;
  EXPECT_THROW(estimate_cardinality_corrected(h, config_b2), std::invalid_argument);
  RegisterHistogram wrong_size{std::vector<std::uint32_t>(10, 0)};
  wrong_size.counts[1] = 256;
  EXPECT_THROW(estimate_cardinality_corrected(wrong_size, config_b2), std::invalid_argument);
}

TEST(CorrectedEstimator, SmallGhllCardinalities) {
  // GHLL, b = 2, m = 256, a = 1/m; errors stay near the asymptotic value down to n = 1
  const std::uint32_t m = 256;
  const std::vector<std::uint64_t> grid{1, 10, 100, 1000, 10000, 100000, 1000000};
  const int trials = 300;
  std::vector<double> sum_sq(grid.size());
  for (int t = 0; t < trials; ++t) {
    Ghll s(m, 2., 62);
    RandomStream e(500 + t);
    std::uint64_t inserted = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      for (; inserted < grid[g]; ++inserted) s.insert(e.next_u64());
      const double err = estimate_cardinality_corrected(s.histogram(), s.config()) / grid[g] - 1;
      sum_sq[g] += err * err;
    }
  }
  for (std::size_t g = 0; g < grid.size(); ++g) {
    EXPECT_LE(std::sqrt(sum_sq[g] / trials), 1.2 * 1.0389617614136893 / 16) << "n=" << grid[g];
  }
}

TEST(MlEstimator, SingleRegisterStationaryPoint) {
  for (double b : {1.5, 2.}) {
    for (std::uint32_t k : {1u, 4u, 9u}) {
      const SketchConfig c{1, b, 3., 20};
      const double rate = c.a * std::pow(b, -static_cast<double>(k));
      const double closed = std::log(b) / (rate * (b - 1));
      // 10^6-point grid search over log n
      auto loglik = [&](double n) { return std::log(std::exp(-n * rate) - std::exp(-n * rate * b)); };
      double best_n = 0, best = -std::numeric_limits<double>::infinity();
      const double lo = std::log(closed / 10), hi = std::log(closed * 10);
      for (int i = 0; i <= 1'000'000; ++i) {
        const double n = std::exp(lo + (hi - lo) * i / 1e6);
        if (const double v = loglik(n); v > best) best = v, best_n = n;
      }
      const double ml = estimate_cardinality_ml(std::vector<std::uint32_t>{k}, c);
      EXPECT_NEAR(ml, closed, 1e-8 * closed);
      EXPECT_NEAR(ml, best_n, 1e-4 * closed);
    }
  }
}

TEST(MlEstimator, DegenerateInputs) {
  EXPECT_EQ(estimate_cardinality_ml(std::vector<std::uint32_t>(256, 0), config_b2), 0.);
  EXPECT_TRUE(std::isinf(estimate_cardinality_ml(std::vector<std::uint32_t>(256, 63), config_b2)));
  std::vector<std::uint32_t> mixed(256, 0);
  for (std::size_t i = 0; i < 128; ++i) mixed[i] = 63;
  const double n = estimate_cardinality_ml(mixed, config_b2);
  EXPECT_GT(n, 0.);
  EXPECT_TRUE(std::isfinite(n));
}

TEST(MlEstimator, AgreesWithRawEstimator) {
  // An efficient estimator has Cov(ml, raw) = Var(ml), so the relative
  // difference has standard deviation sqrt(rsd_raw^2 - rsd_ml^2) with the
  // Cramer-Rao value rsd_ml = 1.0367188778 / sqrt(m) at b = 2, a = 20.
  const double sd_expected = 0.0042644561337782010;
  const double within_half_percent = 0.75899658815877419;
  const auto ctx = make_context(config_b2, Variant::setsketch1);
  const int trials = 1000;
  int close = 0;
  double sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    SetSketch s(ctx);
    RandomStream e(9000 + t);
    for (int i = 0; i < 10000; ++i) s.insert(e.next_u64());
    const double raw = estimate_cardinality_raw(s.registers(), s.config());
    const double ml = estimate_cardinality_ml(s.registers(), s.config());
    const double d = ml / raw - 1;
    close += std::abs(d) < 0.005;
    sum_sq += d * d;
  }
  EXPECT_NEAR(std::sqrt(sum_sq / trials), sd_expected, 0.15 * sd_expected);
  // about 3.3 binomial standard deviations
  EXPECT_NEAR(close / double(trials), within_half_percent, 0.045);
}

TEST(RsdTheoretical, Values) {
  EXPECT_NEAR(rsd_theoretical(2., 1), 1.0389617614136893, 1e-15);
  EXPECT_NEAR(rsd_theoretical(1 + 1e-9, 256), 1. / 16, 1e-6);
  double prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double b = 1.0001 + i * (2 - 1.0001) / 1000;
    const double r = rsd_theoretical(b, 256);
    EXPECT_GE(r, prev);
    prev = r;
  }
  EXPECT_THROW(rsd_theoretical(1., 256), std::invalid_argument);
}

TEST(MinHashEstimator, Values) {
  EXPECT_NEAR(estimate_cardinality_mh(std::vector<double>(64, -std::expm1(-1.))), 1., 1e-15);
  std::vector<double> degenerate(8, 0.5);
  degenerate[2] = 1.;
  EXPECT_THROW(estimate_cardinality_mh(degenerate), std::domain_error);
  EXPECT_THROW(estimate_cardinality_mh(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(estimate_cardinality_mh(std::vector<double>{0.5, 0.}), std::invalid_argument);
}

TEST(MinHashEstimator, RelativeErrorMatchesTheory) {
  const int trials = 1000;
  const int n = 10000;
  double sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    MinHash s(256);
    RandomStream e(300 + t);
    for (int i = 0; i < n; ++i) s.insert(e.next_u64());
    const double err = estimate_cardinality_mh(s.components()) / n - 1;
    sum_sq += err * err;
  }
  EXPECT_NEAR(std::sqrt(sum_sq / trials), 1. / 16, 0.15 / 16);
}
