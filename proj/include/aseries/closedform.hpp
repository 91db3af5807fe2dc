#pragma once

// Antiderivative kits for the moments I_nu^(p)(x) = int_0^x t^nu arcsin^p(t) dt
// (p = 1..4), the closed-form right-hand sides of the shifted series they
// produce, and exact specializations at x in {1, 1/2, sqrt2/2, sqrt3/2}.

#include "aseries/exactnum.hpp"
#include "aseries/polyops.hpp"
#include "aseries/real.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aseries {

/// Polynomial tuple expressing I_nu^(p). Absent components are zero; for
/// odd p the last slot (h for p = 1, w for p = 3) is a constant.
struct Kit {
  int p = 1;
  unsigned long nu = 0;
  RatPoly f, g, h, u, w;
};

/// Sum over (j, e) of P_{j,e}(x) * arcsin(x)^j * sqrt(1-x^2)^e, j <= 4, e <= 1.
class ClosedFormExpr {
 public:
  using Key = std::pair<int, int>;

  void add(int j, int e, const RatPoly& poly) {
    if (j < 0 || j > 4 || e < 0 || e > 1) throw std::out_of_range("ClosedFormExpr: bad (j, e)");
    if (poly.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{j, e}, poly);
    if (!inserted) {
      it->second += poly;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Key, RatPoly>& terms() const { return terms_; }

  RatPoly at(int j, int e) const {
    auto it = terms_.find({j, e});
    return it == terms_.end() ? RatPoly{} : it->second;
  }

  ClosedFormExpr& operator+=(const ClosedFormExpr& o) {
    for (const auto& [k, poly] : o.terms_) add(k.first, k.second, poly);
    return *this;
  }
  ClosedFormExpr& operator-=(const ClosedFormExpr& o) {
    for (const auto& [k, poly] : o.terms_) add(k.first, k.second, -poly);
    return *this;
  }
  ClosedFormExpr& operator*=(const BigRat& q) {
    if (q == 0) terms_.clear();
    for (auto& [k, poly] : terms_) poly *= q;
    return *this;
  }
  friend ClosedFormExpr operator*(ClosedFormExpr a, const BigRat& q) { return a *= q; }
  friend ClosedFormExpr operator+(ClosedFormExpr a, const ClosedFormExpr& b) { return a += b; }
  friend ClosedFormExpr operator-(ClosedFormExpr a, const ClosedFormExpr& b) { return a -= b; }
  friend bool operator==(const ClosedFormExpr&, const ClosedFormExpr&) = default;

  ClosedFormExpr shifted(std::size_t k) const {
    ClosedFormExpr r;
    for (const auto& [key, poly] : terms_) r.terms_.emplace(key, poly.shifted(k));
    return r;
  }

  /// Largest k such that x^k divides every coefficient polynomial.
  std::size_t common_low_order() const {
    std::size_t k = 0;
    bool first = true;
    for (const auto& [key, poly] : terms_) {
      std::size_t lo = poly.low_order();
      k = first ? lo : std::min(k, lo);
      first = false;
    }
    return k;
  }

  ClosedFormExpr unshifted(std::size_t k) const {
    ClosedFormExpr r;
    for (const auto& [key, poly] : terms_) r.terms_.emplace(key, poly.unshifted(k));
    return r;
  }

  /// Numeric value at |x| <= 1.
  Real evaluate(const Real& x) const {
    mpfr_prec_t bits = x.precision();
    Real one(1L, bits);
    Real as = asin(x);
    Real s = sqrt(one - x * x);
    Real sum(bits);
    for (const auto& [key, poly] : terms_) {
      Real t = poly.evaluate(x);
      if (key.first > 0) t *= pow(as, key.first);
      if (key.second == 1) t *= s;
      sum += t;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [key, poly] = *it;
      if (!first) os << " + ";
      first = false;
      os << "(" << poly.to_string() << ")";
      if (key.first == 1) os << "*asin(x)";
      else if (key.first > 1) os << "*asin(x)^" << key.first;
      if (key.second == 1) os << "*sqrt(1-x^2)";
    }
    return os.str();
  }

 private:
  std::map<Key, RatPoly> terms_;
};

namespace detail {

inline BigRat cb(unsigned long m) { return BigRat(central_binom(m)); }
inline BigRat p4(unsigned long m) { return BigRat(pow4(m)); }
inline BigRat p2(unsigned long m) { return BigRat(pow2(m)); }

// f^(1): x^{2l+1} or x^{2l+2} - C(2l+2,l+1)/4^{l+1}
inline RatPoly f1(unsigned long nu) {
  unsigned long l = nu / 2;
  if (nu % 2 == 0) return RatPoly::monomial(1, 2 * l + 1);
  return RatPoly::monomial(1, 2 * l + 2) - RatPoly::constant(cb(l + 1) / p4(l + 1));
}

inline RatPoly g1(unsigned long nu) {
  unsigned long l = nu / 2;
  std::vector<BigRat> c;
  if (nu % 2 == 0) {
    c.resize(2 * l + 1);
    BigRat lead = p4(l) / ((2 * l + 1) * cb(l));
    for (unsigned long j = 0; j <= l; ++j) c[2 * j] = lead * cb(j) / p4(j);
  } else {
    c.resize(2 * l + 2);
    BigRat lead = cb(l + 1) / (2 * p4(l + 1));
    for (unsigned long j = 0; j <= l; ++j) c[2 * j + 1] = lead * p2(2 * j + 1) / ((2 * j + 1) * cb(j));
  }
  return RatPoly(std::move(c));
}

inline BigRat h1_constant(unsigned long nu) {
  unsigned long l = nu / 2;
  if (nu % 2 == 1) return 0;
  return -p4(l) / ((2 * l + 1) * cb(l));
}

inline RatPoly h2(unsigned long nu) {
  unsigned long l = nu / 2;
  std::vector<BigRat> c;
  if (nu % 2 == 0) {
    c.resize(2 * l + 2);
    BigRat lead = -p4(l + 1) / ((2 * l + 1) * cb(l));
    for (unsigned long j = 0; j <= l; ++j) c[2 * j + 1] = lead * cb(j) / (p2(2 * j + 1) * (2 * j + 1));
  } else {
    c.resize(2 * l + 3);
    BigRat lead = -cb(l + 1) / (2 * p4(l + 1));
    for (unsigned long j = 1; j <= l + 1; ++j) c[2 * j] = lead * p4(j) / (cb(j) * (j * j));
  }
  return RatPoly(std::move(c));
}

inline BigRat inv_sq_sum(unsigned long from, unsigned long to) {
  BigRat s = 0;
  for (unsigned long j = from; j <= to; ++j) s += BigRat(1, j * j);
  return s;
}

inline RatPoly h3(unsigned long nu) {
  RatPoly h = h2(nu) * BigRat(3);
  if (nu % 2 == 1) {
    unsigned long l = nu / 2;
    h += RatPoly::constant(3 * cb(l + 1) / (2 * p4(l + 1)) * inv_sq_sum(1, l + 1));
  }
  return h;
}

inline RatPoly u3(unsigned long nu) {
  unsigned long l = nu / 2;
  std::vector<BigRat> c;
  if (nu % 2 == 0) {
    c.resize(2 * l + 1);
    BigRat lead = -6 * p4(l) / ((2 * l + 1) * cb(l));
    BigRat inner = 0;  // sum_{j=r}^{l} 1/(2j+1)^2, built from the top
    for (unsigned long r = l + 1; r-- > 0;) {
      inner += BigRat(1, (2 * r + 1) * (2 * r + 1));
      c[2 * r] = lead * inner * cb(r) / p4(r);
    }
  } else {
    c.resize(2 * l + 2);
    BigRat lead = -3 * cb(l + 1) / p4(l + 2);
    BigRat inner = 0;  // sum_{j=r+1}^{l+1} 1/j^2
    for (unsigned long r = l + 1; r-- > 0;) {
      inner += BigRat(1, (r + 1) * (r + 1));
      c[2 * r + 1] = lead * inner * p2(2 * r + 1) / ((2 * r + 1) * cb(r));
    }
  }
  return RatPoly(std::move(c));
}

inline BigRat w3_constant(unsigned long nu) {
  unsigned long l = nu / 2;
  if (nu % 2 == 1) return 0;
  BigRat odd = 0;
  for (unsigned long j = 0; j <= l; ++j) odd += BigRat(1, (2 * j + 1) * (2 * j + 1));
  return 6 * p4(l) / ((2 * l + 1) * cb(l)) * odd;
}

inline RatPoly w4(unsigned long nu) {
  unsigned long l = nu / 2;
  std::vector<BigRat> c;
  if (nu % 2 == 0) {
    c.resize(2 * l + 2);
    BigRat lead = 3 * p4(l + 2) / ((2 * l + 1) * cb(l));
    BigRat inner = 0;  // sum_{j=r}^{l} 1/(2j+1)^2
    for (unsigned long r = l + 1; r-- > 0;) {
      inner += BigRat(1, (2 * r + 1) * (2 * r + 1));
      c[2 * r + 1] = lead * inner * cb(r) / (p2(2 * r + 1) * (2 * r + 1));
    }
  } else {
    c.resize(2 * l + 3);
    BigRat lead = 6 * cb(l + 1) / p4(l + 2);
    BigRat inner = 0;  // sum_{j=r}^{l+1} 1/j^2
    for (unsigned long r = l + 2; r-- > 1;) {
      inner += BigRat(1, r * r);
      c[2 * r] = lead * inner * p4(r) / (cb(r) * (r * r));
    }
  }
  return RatPoly(std::move(c));
}

}  // namespace detail

/// Builds the kit for I_nu^(p) from the explicit component formulas.
///
/// The integration constants (h for p = 1, w for p = 3) are cross-checked
/// against I(0) = 0; a disagreement means the formulas are inconsistent and
/// is reported as std::logic_error.
inline Kit build_kit(int p, unsigned long nu) {
  if (p < 1 || p > 4) throw std::invalid_argument("build_kit: p must be in 1..4");
  Kit k;
  k.p = p;
  k.nu = nu;
  k.f = detail::f1(nu);
  RatPoly g1 = detail::g1(nu);
  k.g = g1 * BigRat(p);
  switch (p) {
    case 1: {
      BigRat h = detail::h1_constant(nu);
      if (h != -g1[0]) throw std::logic_error("build_kit: h^(1) disagrees with I(0) = 0");
      k.h = RatPoly::constant(h);
      break;
    }
    case 2:
      k.h = detail::h2(nu);
      break;
    case 3: {
      k.h = detail::h3(nu);
      k.u = detail::u3(nu);
      BigRat w = detail::w3_constant(nu);
      if (w != -k.u[0]) throw std::logic_error("build_kit: w^(3) disagrees with I(0) = 0");
      k.w = RatPoly::constant(w);
      break;
    }
    case 4:
      k.h = detail::h3(nu) * BigRat(2);
      k.u = detail::u3(nu) * BigRat(4);
      k.w = detail::w4(nu);
      break;
  }
  return k;
}

namespace detail {

// Placement of the i-th kit component in the (arcsin power, sqrt flag) basis.
inline std::pair<int, int> slot(int p, int i) {
  int j = p - i;
  if (j < 0) return {0, 0};
  return {j, i % 2};
}

inline const RatPoly& component(const Kit& k, int i) {
  switch (i) {
    case 0: return k.f;
    case 1: return k.g;
    case 2: return k.h;
    case 3: return k.u;
    default: return k.w;
  }
}

inline int component_count(int p) { return p % 2 == 0 ? p + 1 : p + 2; }

}  // namespace detail

/// (1/(nu+1)) (f as^p + g s as^{p-1} + h as^{p-2} + u s as^{p-3} + w).
inline ClosedFormExpr kit_to_integral_expr(const Kit& kit) {
  ClosedFormExpr e;
  BigRat scale(1, kit.nu + 1);
  for (int i = 0; i < detail::component_count(kit.p); ++i) {
    auto [j, s] = detail::slot(kit.p, i);
    e.add(j, s, detail::component(kit, i) * scale);
  }
  return e;
}

/// d/dx of a ClosedFormExpr, in the basis arcsin^j (plain) and
/// arcsin^j / sqrt(1-x^2) (over_sqrt).
struct DerivativeForm {
  std::map<int, RatPoly> plain;
  std::map<int, RatPoly> over_sqrt;

  void add(std::map<int, RatPoly>& m, int j, const RatPoly& poly) {
    if (poly.is_zero()) return;
    auto& slot = m[j];
    slot += poly;
    if (slot.is_zero()) m.erase(j);
  }
};

inline DerivativeForm differentiate(const ClosedFormExpr& e) {
  DerivativeForm d;
  for (const auto& [key, poly] : e.terms()) {
    auto [j, s] = key;
    if (s == 0) {
      // (P as^j)' = P' as^j + j P as^{j-1} / sqrt
      d.add(d.plain, j, poly.derivative());
      if (j > 0) d.add(d.over_sqrt, j - 1, poly * BigRat(j));
    } else {
      // (P sqrt as^j)' = -(D P) as^j / sqrt + j P as^{j-1}
      d.add(d.over_sqrt, j, -apply_D(poly));
      if (j > 0) d.add(d.plain, j - 1, poly * BigRat(j));
    }
  }
  return d;
}

/// True iff the kit satisfies its coefficient system exactly:
///   f' = (nu+1) x^nu,  D g = p f,  h' = -(p-1) g,  D u = (p-2) h,  w' = -(p-3) u
/// (only the relations present for the given p), and the assembled
/// expression differentiates to x^nu arcsin^p(x).
inline bool verify_kit_derivative(int p, unsigned long nu) {
  Kit k = build_kit(p, nu);
  BigRat np1(nu + 1);
  if (k.f.derivative() != RatPoly::monomial(np1, nu)) return false;
  if (apply_D(k.g) != k.f * BigRat(p)) return false;
  if (p == 1) {
    if (k.h.degree() > 0) return false;
  } else {
    if (k.h.derivative() != -(k.g * BigRat(p - 1))) return false;
  }
  if (p == 3) {
    if (apply_D(k.u) != k.h) return false;
    if (k.w.degree() > 0) return false;
  }
  if (p == 4) {
    if (apply_D(k.u) != k.h * BigRat(2)) return false;
    if (k.w.derivative() != -k.u) return false;
  }

  DerivativeForm d = differentiate(kit_to_integral_expr(k));
  std::map<int, RatPoly> want;
  want[p] = RatPoly::monomial(1, nu);
  return d.plain == want && d.over_sqrt.empty();
}

/// Right-hand side of the shifted-series theorem for arcsin^p:
/// value(x) = scale * x^x_power * expr(x).
struct TheoremRhs {
  BigRat scale = 1;
  int x_power = 0;
  ClosedFormExpr expr;
};

/// Closed form of the series
///   p=1: sum_{k>=0} C(2k,k)/(2k+n+1) (x/2)^{2k}
///   p=2: sum_{k>=1} (2x)^{2k} / (C(2k,k) k (2k+n))
///   p=3: sum_{k>=0} C(2k,k) G(k) x^{2k+1} / (4^k (2k+1+n))
///   p=4: sum_{k>=1} 4^k H(k) x^{2k} / (C(2k,k) k (2k+n))
/// obtained from the series-shift transform
///   sum c_k x^{m_k+n}/(m_k+n) = f(x) x^n - n int_0^x t^{n-1} f(t) dt
/// with f = arcsin^p and the moment kit for nu = n - 1.
inline TheoremRhs rhs_theorem(int p, unsigned long n) {
  if (p < 1 || p > 4) throw std::invalid_argument("rhs_theorem: p must be in 1..4");
  // normalization: series = kappa * x^{-alpha} * (f(x) - n x^{-n} I_{n-1}(x))
  static const BigRat kappa[5] = {0, 1, 1, BigRat(1, 6), BigRat(1, 12)};
  int alpha = p == 1 ? 1 : 0;

  TheoremRhs r;
  r.scale = kappa[p];
  ClosedFormExpr e;
  e.add(p, 0, RatPoly::monomial(1, n));
  if (n > 0) {
    ClosedFormExpr moment = kit_to_integral_expr(build_kit(p, n - 1));
    e -= moment * BigRat(n);
  }
  std::size_t lo = e.common_low_order();
  r.expr = e.unshifted(lo);
  r.x_power = static_cast<int>(lo) - static_cast<int>(n) - alpha;
  return r;
}

/// The four arguments whose arcsine is a rational multiple of pi.
enum class XCase { One, Half, Sqrt2Half, Sqrt3Half };

inline std::optional<XCase> parse_xcase(std::string_view token) {
  if (token == "1") return XCase::One;
  if (token == "1/2") return XCase::Half;
  if (token == "sqrt2/2") return XCase::Sqrt2Half;
  if (token == "sqrt3/2") return XCase::Sqrt3Half;
  return std::nullopt;
}

inline std::string_view xcase_token(XCase x) {
  switch (x) {
    case XCase::One: return "1";
    case XCase::Half: return "1/2";
    case XCase::Sqrt2Half: return "sqrt2/2";
    case XCase::Sqrt3Half: return "sqrt3/2";
  }
  return "?";
}

namespace detail {

struct SpecialPoint {
  BigRat c;             // x = c * sqrt(d)
  int d;
  BigRat asin_over_pi;  // arcsin(x) / pi
  ExactConst root;      // sqrt(1 - x^2)
};

inline SpecialPoint special_point(XCase x) {
  switch (x) {
    case XCase::One: return {1, 1, BigRat(1, 2), ExactConst{}};
    case XCase::Half: return {BigRat(1, 2), 1, BigRat(1, 6), ExactConst::term(BigRat(1, 2), 0, 3)};
    case XCase::Sqrt2Half: return {BigRat(1, 2), 2, BigRat(1, 4), ExactConst::term(BigRat(1, 2), 0, 2)};
    case XCase::Sqrt3Half: return {BigRat(1, 2), 3, BigRat(1, 3), ExactConst(BigRat(1, 2))};
  }
  throw std::logic_error("special_point");
}

// (c sqrt d)^m for any integer m.
inline ExactConst point_power(const SpecialPoint& pt, int m) {
  unsigned long a = static_cast<unsigned long>(m < 0 ? -m : m);
  BigRat mag = 1;
  for (unsigned long i = 0; i < a; ++i) mag *= pt.c;
  for (unsigned long i = 0; i < a / 2; ++i) mag *= pt.d;
  ExactConst v = a % 2 == 1 ? ExactConst::term(mag, 0, pt.d) : ExactConst(mag);
  return m < 0 ? v.inverse() : v;
}

inline ExactConst evaluate_at(const RatPoly& poly, const SpecialPoint& pt) {
  // even powers are rational, odd powers carry one sqrt(d)
  BigRat even = 0, odd = 0, cpow = 1, dpow = 1;
  const auto& c = poly.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) {
      cpow *= pt.c;
      if (i % 2 == 0) dpow *= pt.d;
    }
    if (c[i] == 0) continue;
    if (i % 2 == 0) even += c[i] * cpow * dpow;
    else odd += c[i] * cpow * dpow;
  }
  return ExactConst(even) + ExactConst::term(odd, 0, pt.d);
}

}  // namespace detail

/// Exact value of rhs_theorem(p, n) at one of the special arguments.
inline ExactConst substitute(const TheoremRhs& rhs, XCase x) {
  detail::SpecialPoint pt = detail::special_point(x);
  ExactConst arcsin = ExactConst::term(pt.asin_over_pi, 1);
  ExactConst sum;
  for (const auto& [key, poly] : rhs.expr.terms()) {
    ExactConst t = detail::evaluate_at(poly, pt);
    for (int i = 0; i < key.first; ++i) t = t * arcsin;
    if (key.second == 1) t = t * pt.root;
    sum += t;
  }
  return sum * detail::point_power(pt, rhs.x_power) * rhs.scale;
}

/// Exact value of the p-th series family with shift n at a special argument.
inline ExactConst corollary_exact(int p, unsigned long n, XCase x) { return substitute(rhs_theorem(p, n), x); }

/// The x = 1 values in closed binomial-sum form, built directly
/// from binomials and finite harmonic-type sums (independent of the kits).
inline ExactConst corollary_x1_formula(int p, unsigned long n) {
  using detail::cb;
  using detail::p2;
  using detail::p4;
  const bool even = n % 2 == 0;
  const unsigned long m = n / 2;  // n = 2m or n = 2m + 1
  ExactConst pi1 = ExactConst::pi_power(1);
  // 2^n / (n C(n-1, (n-1)/2)) for odd n
  auto odd_lead = [&]() -> BigRat { return p2(n) / (BigRat(n) * cb(m)); };
  // sum_{j=0}^{m} C(2j,j) / ((2j+1) 4^j)
  auto arcsin_partial = [&]() -> BigRat {
    BigRat s = 0;
    for (unsigned long j = 0; j <= m; ++j) s += cb(j) / ((2 * j + 1) * p4(j));
    return s;
  };
  switch (p) {
    case 1:
      if (even) return ExactConst::term(cb(m) / p2(n + 1), 1);
      return ExactConst(p2(n - 1) / (BigRat(n) * cb(m)));
    case 2: {
      if (!even) return ExactConst(odd_lead() * arcsin_partial());
      BigRat s = 0;
      for (unsigned long j = 1; j <= m; ++j) s += p4(j) / (cb(j) * (j * j));
      return (ExactConst::pi_power(2) + ExactConst(2 * s)) * (cb(m) / p2(n + 2));
    }
    case 3: {
      if (!even) {
        BigRat lead = p2(n - 1) / (BigRat(n) * cb(m));
        return (pi1 * BigRat(arcsin_partial() / 2) - ExactConst(G(m + 1))) * lead;
      }
      BigRat s = 0;
      for (unsigned long j = 1; j <= m; ++j) s += (p4(j) / cb(j) - 1) / (j * j);
      return (ExactConst::term(BigRat(1, 6), 3) + pi1 * s) * (cb(m) / p2(n + 3));
    }
    case 4: {
      if (!even) {
        ExactConst acc;
        for (unsigned long r = 0; r <= m; ++r) {
          BigRat tail = 0;
          for (unsigned long j = r; j <= m; ++j) tail += BigRat(1, (2 * j + 1) * (2 * j + 1));
          BigRat w = cb(r) / ((2 * r + 1) * p4(r));
          acc += (ExactConst::term(BigRat(1, 8), 2) - ExactConst(tail)) * w;
        }
        return acc * (p2(n) / (BigRat(n) * cb(m)));
      }
      BigRat s1 = 0, s2 = 0;
      for (unsigned long j = 1; j <= m; ++j) s1 += (p4(j) / cb(j) - 1) / (j * j);
      for (unsigned long r = 1; r <= m; ++r) s2 += detail::inv_sq_sum(r, m) * p4(r) / (cb(r) * (r * r));
      ExactConst bracket = ExactConst::term(BigRat(1, 12), 4) + ExactConst::pi_power(2) * s1 - ExactConst(2 * s2);
      // the overall factor is C(n, n/2) / 2^{n+4}; I(0) = 0 and the n = 0
      // case arcsin(1)^4 / 12 = pi^4 / 192 pin it down
      return bracket * (cb(m) / p2(n + 4));
    }
  }
  throw std::invalid_argument("corollary_x1_formula: p must be in 1..4");
}

/// Checks exactly that the two tail identities
///   4^n/C(2n,n) sum_k 4^k/(C(2k,k) k (k+n)) = pi^2 - sum_{j>n} 4^j/(C(2j,j) j^2)
///   (2n+1)C(2n,n)/4^n sum_k 4^k/(C(2k,k) k (2k+2n+1)) = pi - 2 sum_{j>n} C(2j,j)/((2j+1)4^j)
/// follow from the x = 1 values, with each tail written as
/// (full sum) - (finite head), the full sums being pi^2/2 and pi/2.
inline bool corollary_45_consistency(unsigned long n) {
  using detail::cb;
  using detail::p4;
  ExactConst pi1 = ExactConst::pi_power(1);
  ExactConst pi2 = ExactConst::pi_power(2);

  BigRat head_b = 0;
  for (unsigned long j = 1; j <= n; ++j) head_b += p4(j) / (cb(j) * (j * j));
  ExactConst tail_b = pi2 * BigRat(1, 2) - ExactConst(head_b);
  // sum_k 4^k/(C k (k+n)) = 2 * sum_k 4^k/(C k (2k+2n))
  ExactConst lhs_even = corollary_exact(2, 2 * n, XCase::One) * BigRat(2 * p4(n) / cb(n));
  if (lhs_even != pi2 - tail_b) return false;

  BigRat head_c = 0;
  for (unsigned long j = 0; j <= n; ++j) head_c += cb(j) / ((2 * j + 1) * p4(j));
  ExactConst tail_c = pi1 * BigRat(1, 2) - ExactConst(head_c);
  ExactConst lhs_odd = corollary_exact(2, 2 * n + 1, XCase::One) * BigRat((2 * n + 1) * cb(n) / p4(n));
  return lhs_odd == pi1 - tail_c * BigRat(2);
}

/// Exact constants listed for the first even shifts at x = 1/2.
/// p = 1: n = 0, 2, ..., 10; p = 2: n = 0, 2, 4, 6.
inline std::vector<std::pair<unsigned long, ExactConst>> half_argument_table(int p) {
  auto pi_sqrt3 = [](BigRat c) { return ExactConst::term(c, 1, 3); };
  auto sqrt3 = [](BigRat c) { return ExactConst::term(c, 0, 3); };
  auto pi_k = [](BigRat c, int k) { return ExactConst::term(c, k); };
  if (p == 1) {
    return {
        {0, pi_k(BigRat(1, 3), 1)},
        {2, pi_k(BigRat(2, 3), 1) - sqrt3(1)},
        {4, pi_k(2, 1) - sqrt3(BigRat(7, 2))},
        {6, pi_k(BigRat(20, 3), 1) - sqrt3(12)},
        {8, pi_k(BigRat(70, 3), 1) - sqrt3(BigRat(169, 4))},
        {10, pi_k(84, 1) - sqrt3(BigRat(1523, 10))},
    };
  }
  if (p == 2) {
    return {
        {0, pi_k(BigRat(1, 36), 2)},
        {2, pi_k(BigRat(1, 18), 2) - pi_sqrt3(BigRat(1, 6)) + ExactConst(BigRat(1, 2))},
        {4, pi_k(BigRat(1, 6), 2) - pi_sqrt3(BigRat(7, 12)) + ExactConst(BigRat(13, 8))},
        {6, pi_k(BigRat(5, 9), 2) - pi_sqrt3(2) + ExactConst(BigRat(197, 36))},
    };
  }
  throw std::invalid_argument("half_argument_table: only p = 1, 2 are tabulated");
}

}  // namespace aseries
