#pragma once

// Exact arithmetic: central and generalized binomials, harmonic-type weights,
// Pochhammer symbols, and the constant ring spanned by pi^a * sqrt(d).

#include "aseries/real.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace aseries {

inline BigRat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

/// C(2k, k).
inline BigInt central_binom(unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * k, k);
  return r;
}

inline BigInt binom(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt pow4(unsigned long e) { return pow2(2 * e); }

/// G(k) = sum_{j=0}^{k-1} 1/(2j+1)^2.
inline BigRat G(unsigned long k) {
  BigRat s = 0;
  for (unsigned long j = 0; j < k; ++j) s += BigRat(1, (2 * j + 1) * (2 * j + 1));
  return s;
}

/// H(k) = sum_{j=1}^{k-1} 1/(2j)^2, defined for k >= 1.
inline BigRat H(unsigned long k) {
  if (k == 0) throw std::domain_error("H(k) requires k >= 1");
  BigRat s = 0;
  for (unsigned long j = 1; j < k; ++j) s += BigRat(1, 4 * j * j);
  return s;
}

/// Rising factorial (a)_k.
inline BigRat pochhammer(const BigRat& a, unsigned long k) {
  BigRat r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= a + i;
  return r;
}

struct RatioBounds {
  Real lower;
  Real upper;
};

/// Certified enclosure of C(2k,k)/4^k from (7/8)/sqrt(pi k) < . < 1/sqrt(pi k),
/// with the lower end rounded down and the upper end rounded up.
inline RatioBounds binom_ratio_bounds(unsigned long k, mpfr_prec_t bits) {
  if (k == 0) throw std::domain_error("binom_ratio_bounds requires k >= 1");
  Real pi_lo(bits), pi_hi(bits), lo(bits), hi(bits);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);

  // upper = 1 / sqrt(pi_lo * k), every step rounded so the result only grows
  mpfr_mul_ui(hi.get(), pi_lo.get(), k, MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, hi.get(), MPFR_RNDU);

  // lower = 7 / (8 sqrt(pi_hi * k)), every step rounded so the result only shrinks
  mpfr_mul_ui(lo.get(), pi_hi.get(), k, MPFR_RNDU);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDU);
  mpfr_mul_ui(lo.get(), lo.get(), 8, MPFR_RNDU);
  mpfr_ui_div(lo.get(), 7, lo.get(), MPFR_RNDD);
  return {std::move(lo), std::move(hi)};
}

/// Raised when a product leaves the representable constant basis.
class BasisOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Basis element pi^pi_pow * sqrt(radicand).
struct BasisKey {
  int pi_pow = 0;
  int radicand = 1;

  // Canonical order: descending pi power, then ascending radicand.
  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    if (a.pi_pow != b.pi_pow) return a.pi_pow > b.pi_pow;
    return a.radicand < b.radicand;
  }
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// Exact element of span_Q { pi^a sqrt(d) : a in -1..4, d in {1,2,3} }.
class ExactConst {
 public:
  static constexpr int kMinPiPow = -1;
  static constexpr int kMaxPiPow = 4;

  ExactConst() = default;
  ExactConst(const BigRat& q) { add_term({0, 1}, q); }  // NOLINT: implicit by intent
  ExactConst(long q) : ExactConst(BigRat(q)) {}          // NOLINT

  static ExactConst term(const BigRat& c, int pi_pow, int radicand = 1) {
    ExactConst e;
    e.add_term({pi_pow, radicand}, c);
    return e;
  }
  static ExactConst pi_power(int k) { return term(1, k); }
  static ExactConst sqrt_of(int d) { return term(1, 0, d); }

  const std::map<BasisKey, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.count({0, 1})); }

  BigRat coefficient(int pi_pow, int radicand = 1) const {
    auto it = terms_.find({pi_pow, radicand});
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  ExactConst& operator+=(const ExactConst& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  ExactConst& operator-=(const ExactConst& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  ExactConst& operator*=(const BigRat& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= q;
    }
    return *this;
  }

  friend ExactConst operator+(ExactConst a, const ExactConst& b) { return a += b; }
  friend ExactConst operator-(ExactConst a, const ExactConst& b) { return a -= b; }
  friend ExactConst operator-(ExactConst a) { return a *= BigRat(-1); }
  friend ExactConst operator*(ExactConst a, const BigRat& q) { return a *= q; }
  friend ExactConst operator*(const BigRat& q, ExactConst a) { return a *= q; }

  friend ExactConst operator*(const ExactConst& a, const ExactConst& b) {
    ExactConst r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        int pp = ka.pi_pow + kb.pi_pow;
        BigRat c = ca * cb;
        int rad;
        if (ka.radicand == 1) {
          rad = kb.radicand;
        } else if (kb.radicand == 1) {
          rad = ka.radicand;
        } else if (ka.radicand == kb.radicand) {
          c *= ka.radicand;
          rad = 1;
        } else {
          throw BasisOverflow("basis overflow: sqrt(" + std::to_string(ka.radicand) + ")*sqrt(" +
                              std::to_string(kb.radicand) + ")");
        }
        if (pp < kMinPiPow || pp > kMaxPiPow)
          throw BasisOverflow("basis overflow: pi^" + std::to_string(pp));
        r.add_term({pp, rad}, c);
      }
    }
    return r;
  }
  ExactConst& operator*=(const ExactConst& o) { return *this = *this * o; }

  /// Inverse of a single-term constant; anything else has no inverse in the ring.
  ExactConst inverse() const {
    if (terms_.size() != 1) throw BasisOverflow("basis overflow: inverse of a non-monomial constant");
    const auto& [k, c] = *terms_.begin();
    // 1/(c pi^a sqrt(d)) = sqrt(d) / (c d) * pi^-a
    BigRat inv = 1 / (c * k.radicand);
    if (-k.pi_pow < kMinPiPow || -k.pi_pow > kMaxPiPow)
      throw BasisOverflow("basis overflow: pi^" + std::to_string(-k.pi_pow));
    return term(inv, -k.pi_pow, k.radicand);
  }

  friend bool operator==(const ExactConst& a, const ExactConst& b) { return a.terms_ == b.terms_; }

  Real evaluate(mpfr_prec_t bits) const {
    Real sum(bits);
    mpfr_prec_t work = bits + 16;
    Real p = pi(work);
    for (const auto& [k, c] : terms_) {
      Real t(c, work);
      if (k.pi_pow != 0) t *= pow(p, k.pi_pow);
      if (k.radicand != 1) t *= sqrt(Real(static_cast<long>(k.radicand), work));
      sum += t;
    }
    return sum.with_precision(bits);
  }

  /// Rendering: "20/3*pi - 12*sqrt(3)", "1/48*pi^3", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      BigRat mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string factors;
      if (k.pi_pow == 1) factors = "pi";
      else if (k.pi_pow != 0) factors = "pi^" + std::to_string(k.pi_pow);
      if (k.radicand != 1) {
        if (!factors.empty()) factors += "*";
        factors += "sqrt(" + std::to_string(k.radicand) + ")";
      }
      if (factors.empty()) {
        os << mag.get_str();
      } else if (mag == 1) {
        os << factors;
      } else {
        os << mag.get_str() << "*" << factors;
      }
    }
    return os.str();
  }

 private:
  void add_term(BasisKey k, const BigRat& c) {
    if (k.pi_pow < kMinPiPow || k.pi_pow > kMaxPiPow || k.radicand < 1 || k.radicand > 3)
      throw BasisOverflow("basis overflow: pi^" + std::to_string(k.pi_pow) + "*sqrt(" +
                          std::to_string(k.radicand) + ")");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<BasisKey, BigRat> terms_;
};

inline ExactConst exact_add(const ExactConst& a, const ExactConst& b) { return a + b; }
inline ExactConst exact_mul(const ExactConst& a, const ExactConst& b) { return a * b; }
inline bool exact_eq(const ExactConst& a, const ExactConst& b) { return a == b; }

/// C(n, n/2) for any n >= 0. For odd n this is Gamma(n+1)/Gamma(n/2+1)^2,
/// which equals 4^n / (n * C(n-1, (n-1)/2)) * pi^-1.
inline ExactConst gen_binom_half(unsigned long n) {
  if (n % 2 == 0) return ExactConst(BigRat(central_binom(n / 2)));
  BigRat c(pow4(n), BigInt(n) * central_binom((n - 1) / 2));
  c.canonicalize();
  return ExactConst::term(c, -1);
}

}  // namespace aseries
