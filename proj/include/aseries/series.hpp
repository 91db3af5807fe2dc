#pragma once

// Arbitrary-precision evaluation of the shifted arcsine-power series, the
// generalized hypergeometric series, and the identities built from them.
// Truncation for |x| < 1 is certified by the two-sided estimate
//   (7/8) / sqrt(pi k) <= C(2k,k)/4^k <= 1/sqrt(pi k).

#include "aseries/closedform.hpp"
#include "aseries/exactnum.hpp"
#include "aseries/quadrature.hpp"
#include "aseries/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace aseries {

struct EvalReport {
  Real value;
  Real tail_bound;
  unsigned long terms_used = 0;
  int digits = 0;
  bool certified = true;
};

namespace detail {

constexpr long double kLn10 = 2.302585092994045684017991454684364208L;
constexpr long double kLnPi = 1.144729885849400174143427351353058712L;
constexpr long double kInf = std::numeric_limits<long double>::infinity();

inline long double ld(const Real& r) { return mpfr_get_ld(r.get(), MPFR_RNDN); }

inline long double log_abs(const Real& r) {
  if (r.is_zero()) return -kInf;
  Real a = abs(r);
  Real l = log(a);
  return ld(l);
}

// exp(v) with a 1% allowance for the long double evaluation of v.
inline Real exp_bound(long double v, mpfr_prec_t bits) {
  if (v == -kInf) return Real(bits);
  Real r(bits);
  mpfr_set_ld(r.get(), v + 0.01L, MPFR_RNDU);
  return exp(r);
}

/// Smallest K >= lo with log_tail(K) <= target; log_tail must be nonincreasing.
template <class F>
unsigned long choose_cutoff(F log_tail, long double target, unsigned long lo = 1) {
  if (log_tail(lo) <= target) return lo;
  unsigned long hi = lo;
  do {
    if (hi > (1UL << 40)) throw std::runtime_error("series: truncation index out of range");
    lo = hi;
    hi *= 2;
  } while (log_tail(hi) > target);
  while (hi - lo > 1) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (log_tail(mid) <= target) hi = mid;
    else lo = mid;
  }
  return hi;
}

inline long double target_log(const PrecisionCtx& ctx) { return -ctx.digits * kLn10 - std::log(4.0L); }

// int_a^inf t^{-1/2} / (2t + m) dt
inline Real tail_integral(unsigned long a, unsigned long m, mpfr_prec_t bits) {
  Real ar(static_cast<long>(a), bits);
  if (m == 0) return Real(1L, bits) / sqrt(ar);
  Real mr(static_cast<long>(m), bits);
  Real q = sqrt(Real(2L, bits) / mr);
  return q * (pi(bits) / 2L - atan(sqrt(ar * 2L / mr)));
}

// Sum of the terms k < cutoff of family p (estimate mode and certified mode
// share this loop).
inline Real partial_sum(int p, unsigned long n, const Real& x, unsigned long cutoff, mpfr_prec_t bits) {
  Real y = x * x;
  Real sum(bits);
  Real one(1L, bits);
  if (p == 1 || p == 3) {
    Real a = p == 3 ? x : one;  // C(2k,k)/4^k x^{2k} (times x for p = 3)
    Real g(bits);               // G(k)
    for (unsigned long k = 0; k < cutoff; ++k) {
      long den = static_cast<long>(2 * k + 1 + n);
      if (p == 1) sum += a / den;
      else sum += a * g / den;
      long odd = static_cast<long>(2 * k + 1);
      g += one / odd / odd;
      a *= y;
      a *= odd;
      a /= static_cast<long>(2 * k + 2);
    }
  } else {
    Real b = y * 2L;  // 4^k x^{2k} / (C(2k,k) k) at k = 1
    Real h(bits);     // H(k)
    for (unsigned long k = 1; k < cutoff; ++k) {
      long den = static_cast<long>(2 * k + n);
      if (p == 2) sum += b / den;
      else sum += b * h / den;
      long ev = static_cast<long>(2 * k);
      h += one / ev / ev;
      b *= y;
      b *= ev;
      b /= static_cast<long>(2 * k + 1);
    }
  }
  return sum;
}

// G(k) (step 1: odd squares) or H(k) (step 2: even squares) at working precision.
inline Real weight_sum(int step, unsigned long k, mpfr_prec_t bits) {
  Real one(1L, bits), s(bits);
  for (unsigned long j = 0; j < k; ++j) {
    if (step == 2 && j == 0) continue;
    long d = static_cast<long>(step == 1 ? 2 * j + 1 : 2 * j);
    s += one / d / d;
  }
  return s;
}

}  // namespace detail

/// Default truncation used at |x| = 1, where no certified tail bound exists.
constexpr unsigned long kEstimateTerms = 10000;

/// Sum of the p-th family with shift n:
///   p=1: sum_{k>=0} C(2k,k) x^{2k} / (4^k (2k+1+n))
///   p=2: sum_{k>=1} 4^k x^{2k} / (C(2k,k) k (2k+n))
///   p=3: sum_{k>=0} C(2k,k) G(k) x^{2k+1} / (4^k (2k+1+n))
///   p=4: sum_{k>=1} 4^k H(k) x^{2k} / (C(2k,k) k (2k+n))
/// For |x| < 1 the tail bound is certified. At |x| = 1 the sum is truncated at
/// `estimate_terms` and the remainder bracketed by integrals; the report is
/// then marked uncertified.
inline EvalReport lhs_series(int p, unsigned long n, const Real& x, const PrecisionCtx& ctx,
                             unsigned long estimate_terms = kEstimateTerms) {
  if (p < 1 || p > 4) throw std::invalid_argument("lhs_series: p must be in 1..4");
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (abs(xx) > 1.0) throw std::domain_error("x out of domain");

  EvalReport r;
  r.digits = ctx.digits;

  if (abs(xx) == Real(1L, bits)) {
    unsigned long cutoff = std::max(estimate_terms, 2UL);
    Real sqpi = sqrt(pi(bits));
    Real seven_eighths = Real(BigRat(7, 8), bits);
    Real eight_sevenths = Real(BigRat(8, 7), bits);
    Real pi2 = pi(bits) * pi(bits);
    Real lo(bits), hi(bits);
    switch (p) {
      case 1:
        lo = seven_eighths / sqpi * detail::tail_integral(cutoff, n + 1, bits);
        hi = detail::tail_integral(cutoff - 1, n + 1, bits) / sqpi;
        break;
      case 2:
        lo = sqpi * detail::tail_integral(cutoff, n, bits);
        hi = eight_sevenths * sqpi * detail::tail_integral(cutoff - 1, n, bits);
        break;
      case 3:
        lo = detail::weight_sum(1, cutoff, bits) * seven_eighths / sqpi * detail::tail_integral(cutoff, n + 1, bits);
        hi = pi2 / 8L / sqpi * detail::tail_integral(cutoff - 1, n + 1, bits);
        break;
      case 4:
        lo = detail::weight_sum(2, cutoff, bits) * sqpi * detail::tail_integral(cutoff, n, bits);
        hi = pi2 / 24L * eight_sevenths * sqpi * detail::tail_integral(cutoff - 1, n, bits);
        break;
    }
    Real mid = (lo + hi) / 2L;
    if (p == 3 && xx.sign() < 0) mid = -mid;
    r.value = detail::partial_sum(p, n, xx, cutoff, bits) + mid;
    r.tail_bound = (hi - lo) / 2L;
    r.terms_used = p % 2 == 1 ? cutoff : cutoff - 1;
    r.certified = false;
    return r;
  }

  long double lx = detail::log_abs(xx);
  long double ly = 2 * lx;
  long double log1m = std::log1p(-std::exp(ly));
  long double nn = static_cast<long double>(n);
  auto log_tail = [&](unsigned long cut) -> long double {
    long double K = static_cast<long double>(cut);
    switch (p) {
      case 1: return K * ly - std::log(2 * K + 1 + nn) - 0.5L * (detail::kLnPi + std::log(K)) - log1m;
      case 2:
        return std::log(8.0L / 7) + 0.5L * detail::kLnPi + K * ly - 0.5L * std::log(K) - std::log(2 * K + nn) -
               log1m;
      case 3:
        return std::log(1.25L) + (2 * K + 1) * lx - 0.5L * (detail::kLnPi + std::log(K)) -
               std::log(2 * K + 1 + nn) - log1m;
      default:
        return std::log(5.0L / 12) + std::log(8.0L / 7) + 0.5L * detail::kLnPi + K * ly - 0.5L * std::log(K) -
               std::log(2 * K + nn) - log1m;
    }
  };
  unsigned long cutoff = detail::choose_cutoff(log_tail, detail::target_log(ctx));
  r.value = detail::partial_sum(p, n, xx, cutoff, bits);
  r.tail_bound = detail::exp_bound(log_tail(cutoff), bits);
  r.terms_used = p % 2 == 1 ? cutoff : cutoff - 1;
  return r;
}

/// scale * x^x_power * expr(x), evaluated with enough extra bits to absorb
/// the cancellation between the polynomial terms and the x^x_power factor.
inline Real rhs_numeric(const TheoremRhs& rhs, const Real& x, const PrecisionCtx& ctx) {
  mpfr_prec_t base = ctx.bits();
  if (abs(x) > 1.0) throw std::domain_error("x out of domain");
  if (x.is_zero() && rhs.x_power < 0) throw std::domain_error("rhs_numeric: division by zero at x = 0");

  long double ax = std::fabs(detail::ld(x));
  long double mag = 0;
  for (const auto& [key, poly] : rhs.expr.terms()) {
    long double m = 0, xp = 1;
    for (const auto& c : poly.coeffs()) {
      m += std::fabs(static_cast<long double>(c.get_d())) * xp;
      xp *= ax;
    }
    mag += m * std::pow(1.5707963267948966L, key.first);
  }
  long double extra = 32;
  if (mag > 0 && ax > 0) {
    long double l2 = std::log2(mag) + rhs.x_power * std::log2(ax) + std::log2(std::fabs(rhs.scale.get_d()));
    extra += std::max(0.0L, l2);
  }
  mpfr_prec_t bits = base + static_cast<mpfr_prec_t>(std::ceil(extra));
  Real xx = x.with_precision(bits);
  Real v = rhs.expr.evaluate(xx);
  v *= rhs.scale;
  if (rhs.x_power != 0) v *= pow(xx, rhs.x_power);
  return v.with_precision(base);
}

namespace detail {

struct PfqPass {
  EvalReport report;
  Real max_term;
};

// One summation pass at `bits`. Past the index where every a_i + k and b_j + k
// is positive, the term ratio for all later k is bounded by
//   rho_K = |z| prod_i max(1, (a_i+K)/(b_i+K)) prod_{unpaired b} 1/(b+K)
// (upper parameters paired with lower ones, the k! supplying a final 1), and
// the remainder is at most |t_K| / (1 - rho_K).
inline PfqPass pfq_pass(const std::vector<BigRat>& upper, const std::vector<BigRat>& lower, const Real& z,
                        const Real& target, bool terminating, unsigned long last, mpfr_prec_t bits) {
  Real zz = z.with_precision(bits);
  long double az = std::fabs(ld(zz));
  std::vector<BigRat> paired = lower;
  paired.push_back(1);
  long double shift = 0;
  for (const auto& a : upper) shift = std::max(shift, static_cast<long double>(-a.get_d()));
  for (const auto& b : paired) shift = std::max(shift, static_cast<long double>(-b.get_d()));
  unsigned long kmin = static_cast<unsigned long>(std::floor(shift)) + 1;

  Real t(1L, bits), sum(bits);
  PfqPass out;
  out.max_term = Real(1L, bits);
  EvalReport& r = out.report;
  unsigned long k = 0;
  constexpr unsigned long kMaxTerms = 50000000;
  for (;;) {
    if (terminating && k > last) {
      r.tail_bound = Real(bits);
      break;
    }
    sum += t;
    BigRat ratio = 1;
    for (const auto& a : upper) ratio *= a + k;
    for (const auto& b : lower) ratio /= b + k;
    ratio /= k + 1;
    t *= ratio;
    t *= zz;
    ++k;
    Real at = abs(t);
    if (out.max_term < at) out.max_term = at;
    if (t.is_zero() && !terminating) {
      r.tail_bound = Real(bits);
      break;
    }
    if (terminating || k < kmin) continue;
    long double rho = az;
    long double K = static_cast<long double>(k);
    for (std::size_t i = 0; i < paired.size(); ++i) {
      long double b = static_cast<long double>(paired[i].get_d()) + K;
      if (i < upper.size()) {
        long double a = static_cast<long double>(upper[i].get_d()) + K;
        rho *= std::max(1.0L, a / b);
      } else {
        rho /= b;
      }
    }
    rho *= 1 + 1e-15L;
    if (rho < 1) {
      Real bound = at * Real::from_double(static_cast<double>(1.01L / (1 - rho)), bits);
      if (bound <= target) {
        r.tail_bound = bound;
        break;
      }
    }
    if (k > kMaxTerms) throw std::runtime_error("pFq: too many terms");
  }
  r.value = sum;
  r.terms_used = k;
  return out;
}

}  // namespace detail

/// Generalized hypergeometric series pFq(upper; lower; z), |z| < 1 unless
/// some upper parameter is a nonpositive integer (then it is a polynomial).
///
/// tail_bound covers truncation plus rounding. When the terms are much larger
/// than the sum (alternating series with large parameters), the sum is redone
/// with as many extra bits as the cancellation costs.
inline EvalReport pFq(const std::vector<BigRat>& upper, const std::vector<BigRat>& lower, const Real& z,
                      const PrecisionCtx& ctx) {
  for (const auto& b : lower)
    if (b <= 0 && b.get_den() == 1) throw std::domain_error("pFq: pole at nonpositive integer lower parameter");

  bool terminating = false;
  unsigned long last = 0;
  for (const auto& a : upper) {
    if (a <= 0 && a.get_den() == 1) {
      unsigned long deg = static_cast<unsigned long>(-a.get_num().get_si());
      if (!terminating || deg < last) last = deg;
      terminating = true;
    }
  }
  if (!terminating) {
    if (upper.size() > lower.size() + 1) throw std::domain_error("pFq: divergent series (p > q + 1)");
    if (abs(z) >= 1.0) throw std::domain_error("pFq: requires |z| < 1");
  }

  mpfr_prec_t bits = ctx.bits();
  Real target = pow10(-ctx.digits, bits) / 4L;
  detail::PfqPass pass = detail::pfq_pass(upper, lower, z, target, terminating, last, bits);
  mpfr_prec_t work = bits;
  if (!pass.report.value.is_zero()) {
    long double lost = detail::log_abs(pass.max_term) - detail::log_abs(pass.report.value);
    if (lost > 8) {
      work = bits + static_cast<mpfr_prec_t>(std::ceil(lost / std::log(2.0L))) + 16;
      pass = detail::pfq_pass(upper, lower, z, target, terminating, last, work);
    }
  }
  EvalReport r = std::move(pass.report);
  // every addition and ratio step rounds once at `work` bits, relative to the
  // largest term; the final narrowing rounds once at `bits`
  Real per_step(1L, bits);
  mpfr_mul_2si(per_step.get(), per_step.get(), 2 - static_cast<long>(work), MPFR_RNDU);
  Real narrow(1L, bits);
  mpfr_mul_2si(narrow.get(), narrow.get(), 1 - static_cast<long>(bits), MPFR_RNDU);
  Real rounding = pass.max_term.with_precision(bits) * per_step * static_cast<long>(2 * r.terms_used + 4) +
                  abs(r.value.with_precision(bits)) * narrow;
  r.tail_bound = r.tail_bound.with_precision(bits) + rounding;
  r.value = r.value.with_precision(bits);
  r.digits = ctx.digits;
  return r;
}

/// Both sides of an identity, their difference, and a certified bound on the
/// truncation error of the comparison.
struct CheckResult {
  Real lhs;
  Real rhs;
  Real abs_error;
  Real bound;
  unsigned long terms = 0;
};

namespace detail {

inline CheckResult finish(Real lhs, Real rhs, Real bound, unsigned long terms) {
  CheckResult c;
  c.abs_error = abs(lhs - rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.bound = std::move(bound);
  c.terms = terms;
  return c;
}

inline BigRat half_plus(unsigned long n) { return BigRat(2 * n + 1, 2); }

}  // namespace detail

/// 2F1(1/2, n+1/2; n+3/2; x^2) against sqrt(1-x^2) 2F1(1, n+1; n+3/2; x^2).
inline CheckResult check_hyp_88(unsigned long n, const Real& x, const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (abs(xx) >= 1.0) throw std::domain_error("x out of domain");
  Real y = xx * xx;
  EvalReport left = pFq({BigRat(1, 2), detail::half_plus(n)}, {detail::half_plus(n + 1)}, y, ctx);
  EvalReport right = pFq({BigRat(1), BigRat(n + 1)}, {detail::half_plus(n + 1)}, y, ctx);
  Real s = sqrt(Real(1L, bits) - y);
  Real bound = left.tail_bound + s * right.tail_bound;
  return detail::finish(left.value, s * right.value, bound, left.terms_used + right.terms_used);
}

/// (2n-1) 3F2(1,1,n; 3/2,n+1; x) + 3F2(1,n,n; n+1/2,n+1; x)
///   against 2n 2F1(1/2,1; 3/2; x/(x-1)) 2F1(1,n; n+1/2; x).
/// Only 0 < x < 1/2 is checked, where x/(x-1) stays inside the unit disk.
inline CheckResult check_hyp_811(unsigned long n, const Real& x, const PrecisionCtx& ctx) {
  if (n < 1) throw std::invalid_argument("check_hyp_811: n must be >= 1");
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (!(xx > 0.0) || !(xx < 0.5)) throw std::domain_error("check_hyp_811: x outside (0, 1/2) is unchecked");
  BigRat nn(n);
  EvalReport a = pFq({1, 1, nn}, {BigRat(3, 2), nn + 1}, xx, ctx);
  EvalReport b = pFq({1, nn, nn}, {detail::half_plus(n), nn + 1}, xx, ctx);
  Real w = xx / (xx - Real(1L, bits));
  EvalReport c = pFq({BigRat(1, 2), 1}, {BigRat(3, 2)}, w, ctx);
  EvalReport d = pFq({1, nn}, {detail::half_plus(n)}, xx, ctx);
  long m = static_cast<long>(2 * n - 1);
  long two_n = static_cast<long>(2 * n);
  Real lhs = a.value * m + b.value;
  Real rhs = c.value * d.value * two_n;
  Real bound = a.tail_bound * m + b.tail_bound +
               (abs(c.value) * d.tail_bound + abs(d.value) * c.tail_bound + c.tail_bound * d.tail_bound) * two_n;
  return detail::finish(lhs, rhs, bound, a.terms_used + b.terms_used + c.terms_used + d.terms_used);
}

/// One row of the x = 1 scaling toward pi^p.
struct PiScanRow {
  unsigned long n = 0;
  ExactConst scaled;     // exact scaled sum
  ExactConst error;      // scaled - pi^p
  Real scaled_value;
  Real error_value;      // |scaled - pi^p|
};

/// The x = 1 sum S(n) of family p multiplied by 2^{n+1}/C(n,n/2) (p = 1, 2),
/// 2 * 2^{n+3}/C(n,n/2) (p = 3) or 6 * 2^{n+3}/C(n,n/2) (p = 4), with the
/// generalized binomial for odd n; rows n = 0..n_max, computed exactly.
inline std::vector<PiScanRow> limit_scan_pi(int p, unsigned long n_max, const PrecisionCtx& ctx) {
  if (p < 1 || p > 4) throw std::invalid_argument("limit_scan_pi: p must be in 1..4");
  if (n_max < 2) throw std::invalid_argument("limit_scan_pi: n_max must be >= 2");
  mpfr_prec_t bits = ctx.bits();
  ExactConst target = ExactConst::pi_power(p);
  std::vector<PiScanRow> rows;
  rows.reserve(n_max + 1);
  for (unsigned long n = 0; n <= n_max; ++n) {
    BigRat factor = p <= 2 ? BigRat(pow2(n + 1)) : BigRat(pow2(n + 3) * (p == 3 ? 2 : 6));
    ExactConst s = corollary_exact(p, n, XCase::One) * gen_binom_half(n).inverse() * factor;
    PiScanRow row;
    row.n = n;
    row.error = s - target;
    row.scaled_value = s.evaluate(bits);
    row.error_value = abs(row.error.evaluate(bits));
    row.scaled = std::move(s);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// The two limits taken inside the disk:
///   Reciprocal:   (2n+1) sum_k C(2k,k)/(2k+2n+1) (x/2)^{2k}      -> 1/sqrt(1-x^2)
///   ArcsinRatio:  (2n+1) sum_k (2x)^{2k-1}/(C(2k,k) k (2k+2n))  -> arcsin(x)/sqrt(1-x^2)
enum class InnerLimit { Reciprocal, ArcsinRatio };

struct InnerScanRow {
  unsigned long n = 0;
  Real value;
  Real limit;
  Real error;
  Real tail_bound;
};

inline std::vector<InnerScanRow> limit_scan_inner(InnerLimit which, const Real& x, unsigned long n_max,
                                                  const PrecisionCtx& ctx) {
  if (n_max < 2) throw std::invalid_argument("limit_scan_inner: n_max must be >= 2");
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (abs(xx) > 0.95) throw std::domain_error("limit_scan_inner: requires |x| <= 0.95");
  Real s = sqrt(Real(1L, bits) - xx * xx);
  Real limit = which == InnerLimit::Reciprocal ? Real(1L, bits) / s : asin(xx) / s;
  std::vector<InnerScanRow> rows;
  for (unsigned long n = 0; n <= n_max; ++n) {
    InnerScanRow row;
    row.n = n;
    long w = static_cast<long>(2 * n + 1);
    if (which == InnerLimit::Reciprocal) {
      EvalReport e = lhs_series(1, 2 * n, xx, ctx);
      row.value = e.value * w;
      row.tail_bound = e.tail_bound * w;
    } else if (xx.is_zero()) {
      row.value = Real(bits);
      row.tail_bound = Real(bits);
    } else {
      EvalReport e = lhs_series(2, 2 * n, xx, ctx);
      Real f = Real(w, bits) / (xx * 2L);
      row.value = e.value * f;
      row.tail_bound = e.tail_bound * abs(f);
    }
    row.limit = limit;
    row.error = abs(row.value - limit);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Series-shift transform for f = arcsin:
///   sum_k C(2k,k)/4^k x^{2k+1+n}/(2k+1+n)  versus  x^n arcsin(x) - n int_0^x t^{n-1} arcsin(t) dt,
/// the integral taken by quadrature (so agreement is at double precision).
inline CheckResult general_transform_check(unsigned long n, const Real& x, const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (!(xx > 0.0) || !(xx < 1.0)) throw std::domain_error("general_transform_check: x must lie in (0, 1)");
  EvalReport e = lhs_series(1, n, xx, ctx);
  Real xp = pow(xx, static_cast<long>(n + 1));
  Real lhs = e.value * xp;
  Real rhs = pow(xx, static_cast<long>(n)) * asin(xx);
  Real bound = e.tail_bound * xp;
  if (n > 0) {
    QuadResult q = integrate_moment(1, n - 1, xx.to_double());
    rhs -= Real::from_double(q.value, bits) * static_cast<long>(n);
    bound += Real::from_double(q.error_estimate * static_cast<double>(n), bits);
  }
  return detail::finish(lhs, rhs, bound, e.terms_used);
}

/// Identities that trade a shifted series for the tail of another series.
///   ScaledArcsin:     sum_k C(2k,k) x^{2k+2n+1}/(4^k(2k+2n+1))
///                       = C(2n,n) sqrt(1-x^2)/2^{2n+1} sum_{j>=n} d_j
///   CentralBinomial:  2n C(2n,n) sum_k C(2k,k)/(2k+2n) (x/2)^{2k+2n}
///                       = sqrt(1-x^2) sum_{j>=n} C(2j,j) (x/2)^{2j}            (n >= 1)
///   SquareEven:       sum_k (2x)^{2k+2n}/(C(2k,k) k (2k+2n))
///                       = C(2n,n) (sqrt(1-x^2) arcsin(x) sum_{j>=n} d_j - 1/2 sum_{j>n} b_j)
///   SquareOdd:        (2n+1) C(2n,n)/2^{2n+1} sum_k 4^k x^{2k+2n+1}/(C(2k,k) k (2k+2n+1))
///                       = sqrt(1-x^2) arcsin(x) sum_{j>n} C(2j,j)(x/2)^{2j}
///                         - 2 sum_{j>n} C(2j,j)/(2j+1) (x/2)^{2j+1}
/// with d_j = (2x)^{2j+1}/(C(2j,j)(2j+1)) and b_j = (2x)^{2j}/(C(2j,j) j^2).
enum class TailIdentity { ScaledArcsin, CentralBinomial, SquareEven, SquareOdd };

namespace detail {

struct TailSum {
  Real value;
  Real bound;
  unsigned long terms = 0;
};

enum class TailKind { D, C, B, E };

// sum_{j >= j0} of one of the four tail streams at x.
inline TailSum tail_sum(TailKind kind, unsigned long j0, const Real& x, const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  Real y = x * x;
  long double lx = log_abs(x);
  long double log1m = std::log1p(-std::exp(2 * lx));
  auto log_tail = [&](unsigned long cut) -> long double {
    long double J = static_cast<long double>(cut);
    switch (kind) {
      case TailKind::D:
        return std::log(8.0L / 7) + 0.5L * kLnPi + (2 * J + 1) * lx - 0.5L * std::log(J) - log1m;
      case TailKind::C: return 2 * J * lx - 0.5L * (kLnPi + std::log(J)) - log1m;
      case TailKind::B: return std::log(8.0L / 7) + 0.5L * kLnPi + 2 * J * lx - 1.5L * std::log(J) - log1m;
      default:
        return (2 * J + 1) * lx - std::log(2.0L) - 0.5L * (kLnPi + std::log(J)) - std::log(2 * J + 1) - log1m;
    }
  };
  unsigned long cut = choose_cutoff(log_tail, target_log(ctx), std::max(j0, 1UL));

  Real cj(central_binom(j0), bits);
  Real t(bits);
  switch (kind) {
    case TailKind::D: t = pow(x * 2L, static_cast<long>(2 * j0 + 1)) / cj / static_cast<long>(2 * j0 + 1); break;
    case TailKind::C: t = cj * pow(x / 2L, static_cast<long>(2 * j0)); break;
    case TailKind::B: t = pow(x * 2L, static_cast<long>(2 * j0)) / cj / static_cast<long>(j0 * j0); break;
    case TailKind::E: t = cj * pow(x / 2L, static_cast<long>(2 * j0 + 1)) / static_cast<long>(2 * j0 + 1); break;
  }
  TailSum s{Real(bits), exp_bound(log_tail(cut), bits), 0};
  for (unsigned long j = j0; j < cut; ++j) {
    s.value += t;
    ++s.terms;
    long jj = static_cast<long>(j);
    t *= y;
    switch (kind) {
      case TailKind::D: t *= 2 * (jj + 1); t /= 2 * jj + 3; break;
      case TailKind::C: t *= 2 * jj + 1; t /= 2 * (jj + 1); break;
      case TailKind::B: t *= 2 * jj * jj; t /= (2 * jj + 1) * (jj + 1); break;
      case TailKind::E: t *= (2 * jj + 1) * (2 * jj + 1); t /= 2 * (jj + 1) * (2 * jj + 3); break;
    }
  }
  return s;
}

}  // namespace detail

inline CheckResult partial_tail_identity_check(TailIdentity which, unsigned long n, const Real& x,
                                               const PrecisionCtx& ctx) {
  using detail::TailKind;
  mpfr_prec_t bits = ctx.bits();
  Real xx = x.with_precision(bits);
  if (abs(xx) >= 1.0) throw std::domain_error("x out of domain");
  Real s = sqrt(Real(1L, bits) - xx * xx);
  Real as = asin(xx);
  Real cbn(central_binom(n), bits);
  auto scaled = [](const EvalReport& e, const Real& f) { return std::pair{e.value * f, e.tail_bound * abs(f)}; };

  switch (which) {
    case TailIdentity::ScaledArcsin: {
      auto [lhs, lb] = scaled(lhs_series(1, 2 * n, xx, ctx), pow(xx, static_cast<long>(2 * n + 1)));
      detail::TailSum d = detail::tail_sum(TailKind::D, n, xx, ctx);
      Real f = cbn * s / Real(pow2(2 * n + 1), bits);
      return detail::finish(lhs, d.value * f, lb + d.bound * f, d.terms);
    }
    case TailIdentity::CentralBinomial: {
      if (n < 1) throw std::invalid_argument("partial_tail_identity_check: this identity needs n >= 1");
      Real f = cbn * static_cast<long>(2 * n) * pow(xx / 2L, static_cast<long>(2 * n));
      auto [lhs, lb] = scaled(lhs_series(1, 2 * n - 1, xx, ctx), f);
      detail::TailSum c = detail::tail_sum(TailKind::C, n, xx, ctx);
      return detail::finish(lhs, c.value * s, lb + c.bound * s, c.terms);
    }
    case TailIdentity::SquareEven: {
      auto [lhs, lb] = scaled(lhs_series(2, 2 * n, xx, ctx), pow(xx * 2L, static_cast<long>(2 * n)));
      detail::TailSum d = detail::tail_sum(TailKind::D, n, xx, ctx);
      detail::TailSum b = detail::tail_sum(TailKind::B, n + 1, xx, ctx);
      Real sa = s * abs(as);
      Real rhs = cbn * (s * as * d.value - b.value / 2L);
      Real bound = lb + cbn * (sa * d.bound + b.bound / 2L);
      return detail::finish(lhs, rhs, bound, d.terms + b.terms);
    }
    case TailIdentity::SquareOdd: {
      Real f = cbn * static_cast<long>(2 * n + 1) / Real(pow2(2 * n + 1), bits) *
               pow(xx, static_cast<long>(2 * n + 1));
      auto [lhs, lb] = scaled(lhs_series(2, 2 * n + 1, xx, ctx), f);
      detail::TailSum c = detail::tail_sum(TailKind::C, n + 1, xx, ctx);
      detail::TailSum e = detail::tail_sum(TailKind::E, n + 1, xx, ctx);
      Real rhs = s * as * c.value - e.value * 2L;
      Real bound = lb + s * abs(as) * c.bound + e.bound * 2L;
      return detail::finish(lhs, rhs, bound, c.terms + e.terms);
    }
  }
  throw std::invalid_argument("partial_tail_identity_check: unknown identity");
}

}  // namespace aseries
