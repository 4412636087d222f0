#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "setsketch/random.hpp"
#include "setsketch/special_functions.hpp"

using namespace setsketch;

// Reference values below were computed with 40-digit arithmetic by direct
// summation of the defining series.

TEST(Xi, CloseToOneAtBaseTwo) {
  double max1 = 0, max2 = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = i * 1e-3;
    max1 = std::max(max1, std::abs(xi(2., x, 1) - 1));
    max2 = std::max(max2, std::abs(xi(2., x, 2) - 1));
  }
  EXPECT_LE(max1, 1e-5);
  EXPECT_LE(max2, 1e-4);
  // the deviation is real, not a numerical artifact
  EXPECT_GT(max1, 1e-6);
  EXPECT_GT(max2, 1e-5);
}

TEST(Xi, ReferenceValues) {
  EXPECT_NEAR(xi(2., 0., 1), 1.0000063532378644, 1e-13);
  EXPECT_NEAR(xi(2., 0.25, 1), 0.99999242779142892, 1e-13);
  EXPECT_NEAR(xi(2., 0.77, 1), 1.0000083087881121, 1e-13);
  EXPECT_NEAR(xi(2., 0., 2), 1.0000749933548511, 1e-13);
  EXPECT_NEAR(xi(2., 0.5, 2), 0.99992500682438768, 1e-13);
}

TEST(Xi, ExactToDoublePrecisionNearBaseOne) {
  // the deviations from 1 are below 1e-22 for these bases
  EXPECT_NEAR(xi(1.001, 0.3, 1), 1., 1e-13);
  EXPECT_NEAR(xi(1.001, 0.7, 2), 1., 1e-13);
  EXPECT_NEAR(xi(1.2, 0.45, 1), 1., 1e-13);
  EXPECT_NEAR(zeta(1.001, 0.2, 3.7), 3.5, 3.5e-13);
  EXPECT_NEAR(zeta(1.2, 0.1, 9.9), 9.8, 9.8e-13);
}

TEST(Xi, Periodic) {
  for (double b : {1.1, 2.}) {
    for (double x : {0.1, 0.37, 0.9}) {
      EXPECT_NEAR(xi(b, x, 1), xi(b, x + 1, 1), 1e-12);
      EXPECT_NEAR(xi(b, x, 2), xi(b, x + 1, 2), 1e-12);
      EXPECT_NEAR(xi(b, x, 1), xi(b, x - 3, 1), 1e-12);
    }
  }
}

TEST(Xi, DeviationShrinksTowardsBaseOne) {
  auto max_dev = [](double b, int k) {
    double d = 0;
    for (int i = 0; i < 100; ++i) d = std::max(d, std::abs(xi(b, i * 0.01, k) - 1));
    return d;
  };
  EXPECT_LT(max_dev(1.2, 1), max_dev(2., 1));
  EXPECT_LT(max_dev(1.2, 2), max_dev(2., 2));
  EXPECT_LT(max_dev(1.001, 1), 1e-12);
}

TEST(Xi, RejectsInvalidArguments) {
  EXPECT_THROW(xi(1., 0., 1), std::invalid_argument);
  EXPECT_THROW(xi(0.5, 0., 1), std::invalid_argument);
  EXPECT_THROW(xi(2., 0., 3), std::invalid_argument);
  EXPECT_THROW(xi(2., 0., 1, SeriesParams{1e-3}), std::invalid_argument);
}

TEST(Zeta, ApproximatesDifference) {
  EXPECT_EQ(zeta(2., 0.4, 0.4), 0.);
  RandomStream s(1);
  for (int i = 0; i < 1000; ++i) {
    const double x1 = 20 * s.next_uniform() - 10;
    const double width = 0.1 + 9.9 * s.next_uniform();
    EXPECT_LT(std::abs(zeta(2., x1, x1 + width) - width) / width, 1e-5);
  }
}

TEST(Zeta, ReferenceValues) {
  EXPECT_NEAR(zeta(2., 0.3, 2.7), 2.3999980766769657, 1e-12);
  EXPECT_NEAR(zeta(2., 0.05, 5.55), 5.4999970827325048, 1e-12);
  // b = 1.1: the relative deviation from x2 - x1 is below 1e-15
  EXPECT_LT(std::abs(zeta(1.1, 0.3, 2.7) - 2.4) / 2.4, 1e-9);
  EXPECT_LT(std::abs(zeta(1.1, 0.05, 5.55) - 5.5) / 5.5, 1e-9);
}

TEST(Zeta, Antisymmetric) { EXPECT_NEAR(zeta(2., 1.5, 0.2), -zeta(2., 0.2, 1.5), 1e-14); }

TEST(Sigma, SpecialValues) {
  EXPECT_EQ(sigma(2., 0.), 0.);
  EXPECT_TRUE(std::isinf(sigma(2., 1.)));
  EXPECT_TRUE(std::isinf(sigma(2., 1 - 1e-13)));
  EXPECT_THROW(sigma(2., -0.1), std::invalid_argument);
  EXPECT_THROW(sigma(2., 1.1), std::invalid_argument);
  EXPECT_THROW(sigma(1., 0.5), std::invalid_argument);
}

TEST(Sigma, ReferenceValues) {
  EXPECT_NEAR(sigma(2., 0.5), 0.89074707403779030, 1e-12);
  EXPECT_NEAR(sigma(1.001, 0.3), 0.54890073466441822, 1e-12);
}

TEST(Tau, SpecialValues) {
  EXPECT_EQ(tau(2., 0.), 0.);
  EXPECT_EQ(tau(2., 1.), 0.);
  EXPECT_THROW(tau(2., 1.5), std::invalid_argument);
  EXPECT_THROW(tau(2., -1e-9), std::invalid_argument);
}

TEST(Tau, ReferenceValues) {
  EXPECT_NEAR(tau(2., 0.5), 0.14992949586408809, 1e-12);
  EXPECT_NEAR(tau(1.001, 0.3), 0.28126786441087547, 1e-12);
}

TEST(Series, TighterToleranceChangesLittle) {
  const SeriesParams loose{1e-12}, tight{1e-15};
  for (double b : {1.001, 1.2, 2.}) {
    for (double x : {0.05, 0.3, 0.5, 0.9, 0.999}) {
      EXPECT_NEAR(sigma(b, x, loose), sigma(b, x, tight), 1e-11 * sigma(b, x, tight));
      EXPECT_NEAR(tau(b, x, loose), tau(b, x, tight), 1e-11);
    }
    EXPECT_NEAR(xi(b, 0.3, 1, loose), xi(b, 0.3, 1, tight), 1e-11);
    EXPECT_NEAR(zeta(b, 0.3, 2.2, loose), zeta(b, 0.3, 2.2, tight), 1e-11);
  }
}

TEST(PB, Values) {
  EXPECT_EQ(p_b(2., 0.), 0.);
  EXPECT_EQ(p_b(2., 1.), 1.);
  EXPECT_NEAR(p_b(2., 0.5), 0.41503749927884382, 1e-15);
  EXPECT_NEAR(p_b(1 + 1e-9, 0.3), 0.3, 1e-6);
  EXPECT_THROW(p_b(2., 1.01), std::invalid_argument);
  EXPECT_THROW(p_b(1., 0.5), std::invalid_argument);
}

TEST(PB, MonotoneAndBelowIdentity) {
  for (double b : {1.001, 1.5, 2., 2.7}) {
    double prev = 0;
    for (int i = 1; i <= 100; ++i) {
      const double x = i / 100.;
      const double p = p_b(b, x);
      EXPECT_GT(p, prev);
      EXPECT_LE(p, x + 1e-15);
      prev = p;
    }
  }
}

TEST(XDivExpm1, Values) {
  EXPECT_EQ(x_div_expm1(0.), 1.);
  EXPECT_NEAR(x_div_expm1(1e-10), 1 - 5e-11, 1e-15);
  EXPECT_NEAR(x_div_expm1(1.), 1 / (std::exp(1.) - 1), 1e-15);
  EXPECT_EQ(x_div_expm1(1000.), 0.);
}
