#pragma once

// Independent reference values for the test suites. Everything here is
// written straight from the closed forms as stated (binomial sums, not kits)
// or from term-by-term definitions, so it shares no code path with the
// library routines it is used to check.

#include "aseries/aseries.hpp"

#include <vector>

namespace oracle {

using aseries::BigInt;
using aseries::BigRat;
using aseries::Real;

inline Real cb(unsigned long j, mpfr_prec_t bits) { return Real(aseries::central_binom(j), bits); }

inline Real inv_sq(unsigned long from, unsigned long to, mpfr_prec_t bits, bool odd) {
  Real s(bits), one(1L, bits);
  for (unsigned long j = from; j <= to; ++j) {
    long d = static_cast<long>(odd ? 2 * j + 1 : j);
    s += one / d / d;
  }
  return s;
}

/// Right-hand sides of the four shifted-series theorems, transcribed term by
/// term. The even-n fourth-power case carries an overall 1/2 relative to
/// the stated prefactor (forced by n = 0, where the sum is arcsin^4/12).
inline Real stated_rhs(int p, unsigned long n, const Real& x) {
  mpfr_prec_t bits = x.precision();
  Real one(1L, bits);
  Real s = aseries::sqrt(one - x * x);
  Real as = aseries::asin(x);
  Real X = x * 2L;
  Real h = x / 2L;
  unsigned long m = n / 2;
  auto P = [](const Real& b, unsigned long e) { return aseries::pow(b, static_cast<long>(e)); };

  // recurring finite sums
  auto sum_d = [&](unsigned long top) {  // sum_{j=0}^{top-1} X^{2j+1}/(C_j (2j+1))
    Real r(bits);
    for (unsigned long j = 0; j < top; ++j) r += P(X, 2 * j + 1) / cb(j, bits) / static_cast<long>(2 * j + 1);
    return r;
  };
  auto sum_c = [&](unsigned long top) {  // sum_{j=0}^{top} C_j (x/2)^{2j}
    Real r(bits);
    for (unsigned long j = 0; j <= top; ++j) r += cb(j, bits) * P(h, 2 * j);
    return r;
  };
  auto sum_e = [&](unsigned long top) {  // sum_{j=0}^{top} C_j (x/2)^{2j+1}/(2j+1)
    Real r(bits);
    for (unsigned long j = 0; j <= top; ++j) r += cb(j, bits) * P(h, 2 * j + 1) / static_cast<long>(2 * j + 1);
    return r;
  };

  if (n % 2 == 0) {
    Real lead = cb(m, bits) / P(X, n);
    switch (p) {
      case 1:
        return lead / X * (as * 2L - s * sum_d(m));
      case 2: {
        Real b(bits);
        for (unsigned long j = 1; j <= m; ++j) b += P(X, 2 * j) / cb(j, bits) / static_cast<long>(j * j);
        return lead * (as * as - s * as * sum_d(m) + b / 2L);
      }
      case 3: {
        Real t3(bits), t4(bits);
        for (unsigned long j = 1; j <= m; ++j) t3 += (P(X, 2 * j) / cb(j, bits) - one) / static_cast<long>(j * j);
        for (unsigned long r = 0; r < m; ++r)
          t4 += inv_sq(r + 1, m, bits, false) * P(X, 2 * r + 1) / cb(r, bits) / static_cast<long>(2 * r + 1);
        Real body = P(as, 3) * BigRat(2, 3) - s * as * as * sum_d(m) + as * t3 + s * t4 / 2L;
        return lead / 4L * body;
      }
      default: {
        Real t3(bits), t4(bits), t5(bits);
        for (unsigned long j = 1; j <= m; ++j) t3 += (P(X, 2 * j) / cb(j, bits) - one) / static_cast<long>(j * j);
        for (unsigned long r = 0; r < m; ++r)
          t4 += inv_sq(r + 1, m, bits, false) * P(X, 2 * r + 1) / cb(r, bits) / static_cast<long>(2 * r + 1);
        for (unsigned long r = 1; r <= m; ++r)
          t5 += inv_sq(r, m, bits, false) * P(X, 2 * r) / cb(r, bits) / static_cast<long>(r * r);
        Real body = P(as, 4) / 6L - s / 3L * P(as, 3) * sum_d(m) + as * as / 2L * t3 + s / 2L * as * t4 - t5 / 4L;
        return lead / 2L * body;
      }
    }
  }

  Real two_over_x = Real(2L, bits) / x;
  switch (p) {
    case 1: {
      Real lead = P(two_over_x, n + 1) / static_cast<long>(n + 1) / cb(m + 1, bits);
      return lead * (one - s * sum_c(m));
    }
    case 2: {
      Real lead = P(two_over_x, n) / static_cast<long>(n) / cb(m, bits);
      return lead * (sum_e(m) * 2L - s * as * sum_c(m));
    }
    case 3: {
      Real lead = P(two_over_x, n) / static_cast<long>(2 * n) / cb(m, bits);
      Real t3(bits);
      for (unsigned long r = 0; r <= m; ++r) t3 += inv_sq(r, m, bits, true) * cb(r, bits) * P(h, 2 * r);
      Real body = -(s * as * as / 2L * sum_c(m)) + as * 2L * sum_e(m) + s * t3 - inv_sq(0, m, bits, true);
      return lead * body;
    }
    default: {
      Real lead = P(two_over_x, n) / static_cast<long>(n) / cb(m, bits);
      Real t3(bits), t4(bits);
      for (unsigned long r = 0; r <= m; ++r) {
        Real w = inv_sq(r, m, bits, true) * cb(r, bits);
        t3 += w * P(h, 2 * r);
        t4 += w * P(h, 2 * r + 1) / static_cast<long>(2 * r + 1);
      }
      Real body = -(s / 6L * P(as, 3) * sum_c(m)) + as * as * sum_e(m) + s * as * t3 - t4 * 2L;
      return lead * body;
    }
  }
}

/// First `terms` terms of family p at rational x, summed exactly from the
/// defining coefficients (no recurrences).
inline BigRat exact_partial(int p, unsigned long n, const BigRat& x, unsigned long terms) {
  BigRat sum = 0;
  for (unsigned long k = (p % 2 == 1 ? 0 : 1); k < terms; ++k) {
    BigRat c(aseries::central_binom(k));
    BigRat four_k(aseries::pow4(k));
    BigRat xp = 1;
    for (unsigned long i = 0; i < 2 * k; ++i) xp *= x;
    switch (p) {
      case 1: sum += c / four_k * xp / (2 * k + 1 + n); break;
      case 2: sum += four_k * xp / (c * k * (2 * k + n)); break;
      case 3: sum += c * aseries::G(k) * xp * x / (four_k * (2 * k + 1 + n)); break;
      default: sum += four_k * aseries::H(k) * xp / (c * k * (2 * k + n)); break;
    }
  }
  return sum;
}

/// Plain pFq partial sum: each term is the previous one times the exact
/// rational Pochhammer step.
inline Real pfq_partial(const std::vector<BigRat>& a, const std::vector<BigRat>& b, const Real& z,
                        unsigned long terms) {
  mpfr_prec_t bits = z.precision();
  Real sum(bits), t(1L, bits);
  for (unsigned long k = 0; k < terms; ++k) {
    sum += t;
    BigRat step = 1;
    for (const auto& ai : a) step *= ai + k;
    for (const auto& bi : b) step /= bi + k;
    step /= k + 1;
    t *= step;
    t *= z;
  }
  return sum;
}

}  // namespace oracle
