#pragma once

// Univariate polynomials over Q and the first-order operator
//   (D F)(x) = x F(x) + (x^2 - 1) F'(x)
// together with its inverse on polynomials.

#include "aseries/exactnum.hpp"
#include "aseries/real.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aseries {

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }

  static RatPoly constant(const BigRat& c) { return RatPoly(std::vector<BigRat>{c}); }
  static RatPoly monomial(const BigRat& c, std::size_t deg) {
    std::vector<BigRat> v(deg + 1);
    v[deg] = c;
    return RatPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }

  BigRat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  RatPoly& operator*=(const BigRat& q) {
    if (q == 0) c_.clear();
    for (auto& c : c_) c *= q;
    return *this;
  }

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(RatPoly a) { return a *= BigRat(-1); }
  friend RatPoly operator*(RatPoly a, const BigRat& q) { return a *= q; }
  friend RatPoly operator*(const BigRat& q, RatPoly a) { return a *= q; }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
  }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// p(x) * x^k.
  RatPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigRat> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return RatPoly(std::move(r));
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(r));
  }

  /// Largest k with x^k dividing p (0 for the zero polynomial).
  std::size_t low_order() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k == c_.size() ? 0 : k;
  }

  /// p(x) / x^k; requires x^k | p.
  RatPoly unshifted(std::size_t k) const {
    if (is_zero()) return {};
    for (std::size_t i = 0; i < k; ++i)
      if (c_[i] != 0) throw std::logic_error("RatPoly::unshifted: not divisible");
    return RatPoly(std::vector<BigRat>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  BigRat evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Real evaluate(const Real& x) const {
    Real acc(x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigRat& c = c_[i];
      if (c == 0) continue;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      BigRat mag = abs(c);
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRat> c_;
};

/// x p(x) + (x^2 - 1) p'(x).
inline RatPoly apply_D(const RatPoly& p) {
  RatPoly dp = p.derivative();
  return p.shifted(1) + dp.shifted(2) - dp;
}

struct DInverse {
  RatPoly q;
  BigRat lambda;
};

/// Solves apply_D(q) + lambda = p with deg q = deg p - 1.
///
/// D(x^m) = (m+1) x^{m+1} - m x^{m-1}, so matching coefficients from the top
/// down is a triangular system: q_{j-1} = (p_j + (j+1) q_{j+1}) / j, and the
/// constant term leaves lambda = p_0 + q_1. lambda is the weight of the
/// non-polynomial particular solution log(x + sqrt(x^2-1))/sqrt(x^2-1),
/// whose D-image is 1; the kernel multiple of 1/sqrt(x^2-1) is taken as zero.
inline DInverse invert_D(const RatPoly& p) {
  int d = p.degree();
  if (d <= 0) return {RatPoly{}, p[0]};
  std::vector<BigRat> q(static_cast<std::size_t>(d) + 1);  // q[d] stays 0 as padding
  for (int j = d; j >= 1; --j) {
    BigRat above = j + 1 <= d ? BigRat(q[static_cast<std::size_t>(j + 1)] * (j + 1)) : BigRat(0);
    q[static_cast<std::size_t>(j - 1)] = (p[static_cast<std::size_t>(j)] + above) / j;
  }
  BigRat lambda = p[0] + q[1];
  q.pop_back();
  return {RatPoly(std::move(q)), lambda};
}

/// |x F + (x^2-1) F' - 1| for F(x) = log(x + sqrt(x^2-1)) / sqrt(x^2-1), with
/// F' from a central difference of width `step`. Residual is O(step^2).
inline long double check_log_particular(long double x, long double step) {
  if (!(step > 0)) throw std::domain_error("check_log_particular: step must be positive");
  if (!(x - step > 1)) throw std::domain_error("check_log_particular: requires x > 1 + step");
  auto F = [](long double t) {
    long double r = std::sqrt(t * t - 1);
    return std::log(t + r) / r;
  };
  long double dF = (F(x + step) - F(x - step)) / (2 * step);
  return std::fabs(x * F(x) + (x * x - 1) * dF - 1);
}

}  // namespace aseries
