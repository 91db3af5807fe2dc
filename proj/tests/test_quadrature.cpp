#include "aseries/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

using aseries::integrate_moment;
using aseries::integrate_moment_range;

TEST(Quadrature, ClosedFormAnchors) {
  const double pi = std::acos(-1.0);
  EXPECT_NEAR(integrate_moment(1, 1, 1.0).value, pi / 8, 1e-14);
  EXPECT_NEAR(integrate_moment(1, 0, 1.0).value, pi / 2 - 1, 1e-14);
  EXPECT_NEAR(integrate_moment(2, 0, 1.0).value, pi * pi / 4 - 2, 1e-14);
  // int_0^{1/2} arcsin = asin(1/2)/2 + sqrt(3)/2 - 1
  EXPECT_NEAR(integrate_moment(1, 0, 0.5).value, pi / 12 + std::sqrt(3.0) / 2 - 1, 1e-14);
}

TEST(Quadrature, IncreasingInUpperLimit) {
  for (int p = 1; p <= 4; ++p)
    for (unsigned long nu = 0; nu <= 6; ++nu) {
      double prev = 0;
      for (int i = 1; i <= 20; ++i) {
        double v = integrate_moment(p, nu, i / 20.0).value;
        EXPECT_GT(v, prev) << p << "," << nu << "," << i;
        prev = v;
      }
    }
}

TEST(Quadrature, AdditiveOverSplitIntervals) {
  for (int p = 1; p <= 4; ++p)
    for (double a : {0.2, 0.6, 0.9}) {
      double whole = integrate_moment(p, 3, 1.0).value;
      double parts = integrate_moment(p, 3, a).value + integrate_moment_range(p, 3, a, 1.0).value;
      EXPECT_NEAR(whole, parts, 1e-14);
    }
}

TEST(Quadrature, ReportsWork) {
  auto r = integrate_moment(4, 8, 0.8);
  EXPECT_GT(r.evaluations, 0);
  EXPECT_LT(r.error_estimate, 1e-12);
}

TEST(Quadrature, RejectsBadArguments) {
  EXPECT_THROW(integrate_moment(0, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(integrate_moment(1, 1, 1.5), std::domain_error);
  EXPECT_THROW(integrate_moment(1, 1, 0.0), std::domain_error);
  EXPECT_THROW(integrate_moment_range(1, 1, 0.7, 0.5), std::domain_error);
}
