#pragma once

// Arbitrary-precision real numbers (thin RAII layer over MPFR) and the
// precision context shared by every numeric routine in the library.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace aseries {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Working precision in decimal digits. Every numeric operation evaluated
/// under a context carries at least `digits * log2(10)` bits plus guard bits.
struct PrecisionCtx {
  int digits = 50;

  explicit PrecisionCtx(int d = 50) : digits(d) {
    if (d < 10) throw std::invalid_argument("PrecisionCtx: digits must be >= 10");
  }

  static constexpr int kGuardDigits = 10;

  /// Bits carried by intermediate values (digits plus ten guard digits).
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(
               std::ceil((digits + kGuardDigits) * 3.3219280948873623)) +
           16;
  }
};

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long v, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }
  Real(const BigRat& q, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const BigInt& z, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  static Real from_double(double d, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }

  /// Parses a decimal literal ("0.5", "-1e-3", "7/10" is NOT accepted here).
  static Real parse(std::string_view text, mpfr_prec_t bits) {
    Real r(bits);
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  /// Same value rounded to a different precision.
  Real with_precision(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with exactly `digits` significant digits.
  std::string to_sci(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { return bump(o), mpfr_add(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator-=(const Real& o) { return bump(o), mpfr_sub(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator*=(const Real& o) { return bump(o), mpfr_mul(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator/=(const Real& o) { return bump(o), mpfr_div(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator*=(long k) { return mpfr_mul_si(v_, v_, k, MPFR_RNDN), *this; }
  Real& operator/=(long k) { return mpfr_div_si(v_, v_, k, MPFR_RNDN), *this; }
  Real& operator*=(const BigRat& q) { return mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN), *this; }
  Real& operator+=(const BigRat& q) { return mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN), *this; }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator*(long k, Real a) { return a *= k; }
  friend Real operator/(Real a, long k) { return a /= k; }
  friend Real operator*(Real a, const BigRat& q) { return a *= q; }
  friend Real operator*(const BigRat& q, Real a) { return a *= q; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator<(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) < 0; }
  friend bool operator>(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) > 0; }
  friend bool operator<=(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) <= 0; }
  friend bool operator>=(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) >= 0; }

 private:
  void bump(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

#define ASERIES_UNARY(name, fn)        \
  inline Real name(const Real& a) {    \
    Real r(a.precision());             \
    fn(r.get(), a.get(), MPFR_RNDN);   \
    return r;                          \
  }
ASERIES_UNARY(abs, mpfr_abs)
ASERIES_UNARY(sqrt, mpfr_sqrt)
ASERIES_UNARY(asin, mpfr_asin)
ASERIES_UNARY(log, mpfr_log)
ASERIES_UNARY(exp, mpfr_exp)
ASERIES_UNARY(atan, mpfr_atan)
#undef ASERIES_UNARY

inline Real pow(const Real& a, long k) {
  Real r(a.precision());
  mpfr_pow_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

/// 10^e at the given precision.
inline Real pow10(long e, mpfr_prec_t bits) {
  Real r(10, bits);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

namespace detail {

// Binary splitting state for sum_k 1/(2k+1) * prod_{i=1..k} (2i-1)/(8i).
struct Split {
  BigInt p, q, b, t;
};

inline Split split(unsigned long lo, unsigned long hi) {
  if (hi - lo == 1) {
    Split s;
    s.p = lo == 0 ? 1 : 2 * lo - 1;
    s.q = lo == 0 ? 1 : 8 * lo;
    s.b = 2 * lo + 1;
    s.t = s.p;
    return s;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  Split l = split(lo, mid);
  Split r = split(mid, hi);
  Split s;
  s.p = l.p * r.p;
  s.q = l.q * r.q;
  s.b = l.b * r.b;
  s.t = r.b * r.q * l.t + l.b * l.p * r.t;
  return s;
}

}  // namespace detail

/// pi = 6 arcsin(1/2) = 3 * sum_k C(2k,k) / (16^k (2k+1)), summed by binary
/// splitting. Terms shrink by a factor of at least 4, so N terms give 2N bits.
inline Real pi(mpfr_prec_t bits) {
  thread_local std::map<mpfr_prec_t, Real> cache;
  if (auto it = cache.find(bits); it != cache.end()) return it->second;
  unsigned long terms = static_cast<unsigned long>(bits) / 2 + 16;
  detail::Split s = detail::split(0, terms);
  mpfr_prec_t work = bits + 32;
  Real num(s.t, work);
  Real den(BigInt(s.b * s.q), work);
  Real r = num / den * 3L;
  Real out = r.with_precision(bits);
  cache.emplace(bits, out);
  return out;
}

}  // namespace aseries
