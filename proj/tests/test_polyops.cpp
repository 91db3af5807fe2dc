#include "aseries/polyops.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace aseries;

namespace {

BigRat cb(unsigned long m) { return BigRat(central_binom(m)); }
BigRat p4(unsigned long m) { return BigRat(pow4(m)); }

// Companion polynomials of the first-power moment, written from their
// closed binomial sums.
RatPoly g_even(unsigned long l) {  // nu = 2l
  RatPoly s;
  for (unsigned long j = 0; j <= l; ++j) s += RatPoly::monomial(cb(j) / p4(j), 2 * j);
  return s * (p4(l) / (BigRat(2 * l + 1) * cb(l)));
}

RatPoly g_odd(unsigned long l) {  // nu = 2l + 1
  RatPoly s;
  for (unsigned long j = 0; j <= l; ++j)
    s += RatPoly::monomial(BigRat(pow2(2 * j + 1)) / (BigRat(2 * j + 1) * cb(j)), 2 * j + 1);
  return s * (cb(l + 1) / (2 * p4(l + 1)));
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), num(-50, 50), den(1, 12);
  int d = deg(rng);
  std::vector<BigRat> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) {
    v = BigRat(num(rng), den(rng));
    v.canonicalize();
  }
  return RatPoly(std::move(c));
}

}  // namespace

TEST(RatPoly, BasicAlgebra) {
  RatPoly p{1, 2, 3};  // 1 + 2x + 3x^2
  RatPoly q{0, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(RatPoly{}.degree(), -1);
  EXPECT_EQ(p * q, (RatPoly{0, 1, 2, 3}));
  EXPECT_EQ(p - p, RatPoly{});
  EXPECT_EQ(p.derivative(), (RatPoly{2, 6}));
  EXPECT_EQ(p.shifted(2).low_order(), 2u);
  EXPECT_EQ(p.shifted(2).unshifted(2), p);
  EXPECT_THROW(p.unshifted(1), std::logic_error);
  EXPECT_EQ(p.evaluate(BigRat(1, 2)), BigRat(11, 4));
  EXPECT_EQ(p.to_string(), "3*x^2 + 2*x + 1");
  EXPECT_EQ((RatPoly{0, -1, BigRat(1, 2)}).to_string(), "1/2*x^2 - x");
  EXPECT_EQ(RatPoly{}.to_string(), "0");
}

TEST(ApplyD, MonomialImages) {
  EXPECT_EQ(apply_D(RatPoly{1}), (RatPoly{0, 1}));
  EXPECT_EQ(apply_D(RatPoly{0, 1}), (RatPoly{-1, 0, 2}));
  EXPECT_EQ(apply_D(RatPoly::monomial(1, 5)), (RatPoly{0, 0, 0, 0, -5, 0, 6}));
}

TEST(ApplyD, Linearity) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    RatPoly a = random_poly(rng, 20), b = random_poly(rng, 20);
    BigRat c(7, 3);
    EXPECT_EQ(apply_D(a * c + b), apply_D(a) * c + apply_D(b));
  }
}

TEST(InvertD, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 500; ++t) {
    RatPoly p = random_poly(rng, 30);
    DInverse inv = invert_D(p);
    EXPECT_EQ(apply_D(inv.q) + RatPoly::constant(inv.lambda), p) << p.to_string();
    if (p.degree() >= 1) EXPECT_EQ(inv.q.degree(), p.degree() - 1);
  }
}

TEST(InvertD, WeightOfLogParticular) {
  for (unsigned long l = 0; l <= 15; ++l) {
    EXPECT_EQ(invert_D(RatPoly::monomial(1, 2 * l + 2)).lambda, cb(l + 1) / p4(l + 1)) << l;
    EXPECT_EQ(invert_D(RatPoly::monomial(1, 2 * l + 1)).lambda, 0) << l;
  }
  EXPECT_EQ(invert_D(RatPoly{1}).lambda, 1);
}

TEST(InvertD, MatchesCompanionPolynomials) {
  for (unsigned long l = 0; l <= 15; ++l) {
    DInverse odd = invert_D(RatPoly::monomial(1, 2 * l + 1));
    EXPECT_EQ(odd.q, g_even(l)) << l;
    DInverse even = invert_D(RatPoly::monomial(1, 2 * l + 2));
    EXPECT_EQ(even.q, g_odd(l)) << l;
  }
}

TEST(InvertD, Linearity) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    RatPoly a = random_poly(rng, 25), b = random_poly(rng, 25);
    DInverse ia = invert_D(a), ib = invert_D(b), ic = invert_D(a - b * BigRat(3));
    EXPECT_EQ(ic.q, ia.q - ib.q * BigRat(3));
    EXPECT_EQ(ic.lambda, ia.lambda - ib.lambda * 3);
  }
}

TEST(LogParticular, ResidualShrinksQuadratically) {
  for (long double x : {1.5L, 2.0L, 3.0L, 10.0L}) {
    long double r1 = check_log_particular(x, 1e-3L);
    long double r2 = check_log_particular(x, 1e-4L);
    EXPECT_LT(r1, 1e-5L) << static_cast<double>(x);
    EXPECT_LT(r2, 1e-7L) << static_cast<double>(x);
  }
  EXPECT_THROW(check_log_particular(1.0L, 1e-3L), std::domain_error);
  EXPECT_THROW(check_log_particular(2.0L, 0.0L), std::domain_error);
}
