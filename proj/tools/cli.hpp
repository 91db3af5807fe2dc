#pragma once

// Command logic behind the aseries executable: grid verification, the pi
// scaling report, exact constant tables and single closed forms.

#include "aseries/aseries.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace aseries::cli {

/// Raised for bad flags or arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyRecord {
  std::string family;
  int p = 0;
  long n = 0;
  std::string x;
  int digits = 0;
  std::string lhs;
  std::string rhs;
  std::string abs_error;
  bool certified = false;
  unsigned long terms_used = 0;
  std::string status;
};

inline nlohmann::ordered_json to_json(const VerifyRecord& r) {
  return {{"family", r.family},   {"p", r.p},
          {"n", r.n},             {"x", r.x},
          {"digits", r.digits},   {"lhs", r.lhs},
          {"rhs", r.rhs},         {"abs_error", r.abs_error},
          {"certified", r.certified}, {"terms_used", r.terms_used},
          {"status", r.status}};
}

inline const char* kCsvHeader = "family,p,n,x,digits,lhs,rhs,abs_error,certified,terms_used,status";

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const VerifyRecord& r) {
  std::ostringstream os;
  os << csv_field(r.family) << ',' << r.p << ',' << r.n << ',' << csv_field(r.x) << ',' << r.digits << ','
     << r.lhs << ',' << r.rhs << ',' << r.abs_error << ',' << (r.certified ? "true" : "false") << ','
     << r.terms_used << ',' << r.status;
  return os.str();
}

/// Precision from ASERIES_DIGITS, or 50.
inline int default_digits() {
  const char* env = std::getenv("ASERIES_DIGITS");
  if (env == nullptr || *env == '\0') return 50;
  try {
    std::size_t used = 0;
    int d = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return d;
  } catch (const std::exception&) {
    throw UsageError(std::string("ASERIES_DIGITS is not an integer: ") + env);
  }
}

inline PrecisionCtx make_ctx(int digits) {
  if (digits < 10) throw UsageError("--digits must be at least 10");
  return PrecisionCtx(digits);
}

struct Range {
  long lo = 0;
  long hi = 0;
};

/// "a..b" or a single integer.
inline Range parse_range(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError("bad --n-range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(text);
  } else {
    r.lo = num(text.substr(0, dots));
    r.hi = num(text.substr(dots + 2));
  }
  if (r.lo < 0 || r.hi < r.lo) throw UsageError("bad --n-range '" + text + "'");
  return r;
}

/// An x argument: one of the exact tokens, or a decimal literal.
struct XArg {
  std::string text;
  std::optional<XCase> exact;
  bool malformed = false;
};

inline XArg classify_x(const std::string& text) {
  XArg a{text, parse_xcase(text), false};
  if (a.exact) return a;
  Real v(64);
  try {
    v = Real::parse(text, 64);
  } catch (const std::invalid_argument&) {
    a.malformed = true;
    return a;
  }
  if (!v.is_finite()) a.malformed = true;
  else if (abs(v) > 1.0) throw UsageError("x out of domain: " + text);
  return a;
}

inline Real x_value(const XArg& a, mpfr_prec_t bits) {
  if (!a.exact) return Real::parse(a.text, bits);
  switch (*a.exact) {
    case XCase::One: return Real(1L, bits);
    case XCase::Half: return Real(BigRat(1, 2), bits);
    case XCase::Sqrt2Half: return sqrt(Real(2L, bits)) / 2L;
    case XCase::Sqrt3Half: return sqrt(Real(3L, bits)) / 2L;
  }
  return Real(bits);
}

enum class Kind { Theorem, CorollaryX1, HalfTable, Cor45, Hyp88, Hyp811, LimitPi, Transform, Tail };

struct Family {
  std::string id;
  Kind kind;
  int p;  // 0: taken from --p
  std::string default_x;
  std::optional<TailIdentity> tail;
};

inline const std::vector<Family>& families() {
  static const std::vector<Family> all = {
      {"thm3.2", Kind::Theorem, 1, "0.5", {}},
      {"thm4.2", Kind::Theorem, 2, "0.5", {}},
      {"thm5.2", Kind::Theorem, 3, "0.5", {}},
      {"thm6.2", Kind::Theorem, 4, "0.5", {}},
      {"cor3.3", Kind::CorollaryX1, 1, "1", {}},
      {"cor3.3a", Kind::HalfTable, 1, "1/2", {}},
      {"cor4.3", Kind::CorollaryX1, 2, "1", {}},
      {"cor4.4a", Kind::HalfTable, 2, "1/2", {}},
      {"cor4.5", Kind::Cor45, 2, "1", {}},
      {"cor5.3", Kind::CorollaryX1, 3, "1", {}},
      {"cor6.3", Kind::CorollaryX1, 4, "1", {}},
      {"hyp8.8", Kind::Hyp88, 1, "0.5", {}},
      {"hyp8.11", Kind::Hyp811, 2, "0.25", {}},
      {"limit7.1", Kind::LimitPi, 0, "1", {}},
      {"transform2.1", Kind::Transform, 1, "0.5", {}},
      {"tail3.12", Kind::Tail, 1, "0.5", TailIdentity::ScaledArcsin},
      {"tail3.13", Kind::Tail, 1, "0.5", TailIdentity::CentralBinomial},
      {"tail4.20", Kind::Tail, 2, "0.5", TailIdentity::SquareEven},
      {"tail4.21", Kind::Tail, 2, "0.5", TailIdentity::SquareOdd},
  };
  return all;
}

inline const Family& find_family(const std::string& id) {
  for (const auto& f : families())
    if (f.id == id) return f;
  throw UsageError("unknown family '" + id + "'");
}

struct VerifyOptions {
  std::string family;
  std::optional<int> p;
  std::optional<std::string> n_range;
  std::vector<std::string> xs;
  std::optional<int> digits;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
};

namespace detail {

struct Case {
  long n;
  XArg x;
};

inline std::string num(const Real& v, int digits) { return v.to_sci(digits); }

inline Real slack(const PrecisionCtx& ctx) { return pow10(5 - ctx.digits, ctx.bits()); }

inline void numeric_outcome(VerifyRecord& r, const Real& lhs, const Real& rhs, const Real& tolerance,
                            const PrecisionCtx& ctx) {
  Real err = abs(lhs - rhs);
  r.lhs = num(lhs, ctx.digits);
  r.rhs = num(rhs, ctx.digits);
  r.abs_error = num(err, ctx.digits);
  r.status = err <= tolerance ? "ok" : "fail";
}

inline void exact_outcome(VerifyRecord& r, const ExactConst& lhs, const ExactConst& rhs, const PrecisionCtx& ctx) {
  mpfr_prec_t bits = ctx.bits();
  Real l = lhs.evaluate(bits);
  Real rr = rhs.evaluate(bits);
  r.lhs = num(l, ctx.digits);
  r.rhs = num(rr, ctx.digits);
  r.abs_error = num(abs(l - rr), ctx.digits);
  r.certified = true;
  r.status = lhs == rhs ? "ok" : "fail";
}

inline void check_outcome(VerifyRecord& r, const CheckResult& c, const Real& floor, const PrecisionCtx& ctx) {
  Real tol = max(c.bound, floor) + slack(ctx);
  numeric_outcome(r, c.lhs, c.rhs, tol, ctx);
  r.certified = true;
  r.terms_used = c.terms;
}

inline VerifyRecord run_case(const Family& fam, int p, const Case& c, const PrecisionCtx& ctx,
                             const std::vector<PiScanRow>& scan) {
  VerifyRecord r;
  r.family = fam.id;
  r.p = p;
  r.n = c.n;
  r.x = c.x.text;
  r.digits = ctx.digits;
  if (c.x.malformed) {
    r.status = "fail";
    r.lhs = r.rhs = r.abs_error = "malformed x";
    return r;
  }
  mpfr_prec_t bits = ctx.bits();
  auto un = static_cast<unsigned long>(c.n);
  try {
    switch (fam.kind) {
      case Kind::Theorem: {
        if (c.x.exact == XCase::One) {
          exact_outcome(r, corollary_x1_formula(p, un), corollary_exact(p, un, XCase::One), ctx);
          break;
        }
        Real x = x_value(c.x, bits);
        EvalReport e = lhs_series(p, un, x, ctx);
        Real rhs = c.x.exact ? corollary_exact(p, un, *c.x.exact).evaluate(bits)
                             : rhs_numeric(rhs_theorem(p, un), x, ctx);
        numeric_outcome(r, e.value, rhs, e.tail_bound + slack(ctx), ctx);
        r.certified = e.certified;
        r.terms_used = e.terms_used;
        break;
      }
      case Kind::CorollaryX1:
        exact_outcome(r, corollary_x1_formula(p, un), corollary_exact(p, un, XCase::One), ctx);
        break;
      case Kind::HalfTable:
        for (const auto& [n, v] : half_argument_table(p))
          if (static_cast<long>(n) == c.n) exact_outcome(r, v, corollary_exact(p, n, XCase::Half), ctx);
        break;
      case Kind::Cor45: {
        // 4^n/C(2n,n) sum_k 4^k/(C(2k,k) k (k+n)) from the closed form, against
        // pi^2 - (pi^2/2 - finite head)
        BigRat head = 0;
        for (unsigned long j = 1; j <= un; ++j)
          head += BigRat(pow4(j)) / (BigRat(central_binom(j)) * BigRat(j * j));
        ExactConst lhs = corollary_exact(2, 2 * un, XCase::One) * BigRat(2 * BigRat(pow4(un)) / BigRat(central_binom(un)));
        ExactConst rhs = ExactConst::term(BigRat(1, 2), 2) + ExactConst(head);
        exact_outcome(r, lhs, rhs, ctx);
        if (!corollary_45_consistency(un)) r.status = "fail";
        break;
      }
      case Kind::Hyp88:
        check_outcome(r, check_hyp_88(un, x_value(c.x, bits), ctx), Real(bits), ctx);
        break;
      case Kind::Hyp811:
        check_outcome(r, check_hyp_811(un, x_value(c.x, bits), ctx), Real(bits), ctx);
        break;
      case Kind::Transform:
        // the integral side is a double-precision quadrature
        check_outcome(r, general_transform_check(un, x_value(c.x, bits), ctx), Real::from_double(1e-10, bits), ctx);
        break;
      case Kind::Tail:
        check_outcome(r, partial_tail_identity_check(*fam.tail, un, x_value(c.x, bits), ctx), Real(bits), ctx);
        break;
      case Kind::LimitPi: {
        const PiScanRow& row = scan.at(un);
        r.lhs = num(row.scaled_value, ctx.digits);
        r.rhs = num(ExactConst::pi_power(p).evaluate(bits), ctx.digits);
        r.abs_error = num(row.error_value, ctx.digits);
        r.certified = true;
        // exact for p = 1; otherwise the gap must shrink monotonically
        bool ok = p == 1 ? row.error.is_zero() : (un == 0 || row.error_value < scan.at(un - 1).error_value);
        r.status = ok ? "ok" : "fail";
        break;
      }
    }
  } catch (const std::exception& e) {
    r.status = "fail";
    if (r.lhs.empty()) r.lhs = r.rhs = r.abs_error = e.what();
  }
  return r;
}

}  // namespace detail

/// Runs a verification grid; records come back in canonical (n, x) order.
inline std::vector<VerifyRecord> run_verify(const VerifyOptions& opt) {
  const Family& fam = find_family(opt.family);
  int p = fam.p;
  if (fam.p == 0) {
    if (!opt.p) throw UsageError("--p is required for family " + fam.id);
    p = *opt.p;
  } else if (opt.p && *opt.p != fam.p) {
    throw UsageError("family " + fam.id + " has p = " + std::to_string(fam.p));
  }
  if (p < 1 || p > 4) throw UsageError("--p must be in 1..4");
  PrecisionCtx ctx = make_ctx(opt.digits.value_or(default_digits()));

  std::vector<detail::Case> cases;
  if (fam.kind == Kind::HalfTable) {
    if (opt.n_range || !opt.xs.empty()) throw UsageError("family " + fam.id + " takes no --n-range or --x");
    for (const auto& [n, v] : half_argument_table(p)) cases.push_back({static_cast<long>(n), classify_x("1/2")});
  } else {
    Range range = parse_range(opt.n_range.value_or("0..10"));
    if ((fam.kind == Kind::Hyp811 || (fam.kind == Kind::Tail && fam.tail == TailIdentity::CentralBinomial)) &&
        range.lo < 1)
      throw UsageError("family " + fam.id + " needs n >= 1");
    std::vector<std::string> xs = opt.xs.empty() ? std::vector<std::string>{fam.default_x} : opt.xs;
    std::vector<XArg> parsed;
    for (const auto& t : xs) {
      XArg a = classify_x(t);
      bool exact_only = fam.kind == Kind::CorollaryX1 || fam.kind == Kind::Cor45 || fam.kind == Kind::LimitPi;
      if (exact_only && a.exact != XCase::One) throw UsageError("family " + fam.id + " is stated at x = 1 only");
      parsed.push_back(a);
    }
    for (long n = range.lo; n <= range.hi; ++n)
      for (const auto& a : parsed) cases.push_back({n, a});
  }

  std::vector<PiScanRow> scan;
  if (fam.kind == Kind::LimitPi && !cases.empty())
    scan = limit_scan_pi(p, std::max<unsigned long>(2, static_cast<unsigned long>(cases.back().n)), ctx);

  std::vector<VerifyRecord> out(cases.size());
  unsigned workers = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(cases.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < cases.size(); i += workers) out[i] = detail::run_case(fam, p, cases[i], ctx, scan);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline void write_records(std::ostream& os, const std::vector<VerifyRecord>& recs, const std::string& format) {
  if (format == "json") {
    for (const auto& r : recs) os << to_json(r).dump() << '\n';
  } else if (format == "csv") {
    os << kCsvHeader << '\n';
    for (const auto& r : recs) os << to_csv(r) << '\n';
  } else {
    throw UsageError("--format must be json or csv");
  }
}

inline bool all_ok(const std::vector<VerifyRecord>& recs) {
  return std::all_of(recs.begin(), recs.end(), [](const VerifyRecord& r) { return r.status == "ok"; });
}

struct PiReport {
  int p = 1;
  unsigned long n = 0;
  int digits = 50;
  std::string scaled_exact;
  std::string scaled;
  std::string pi_power;
  std::string error;
  std::string error_exact;  // empty when not reported
};

inline PiReport run_pi(int p, long n, std::optional<int> digits) {
  if (p < 1 || p > 4) throw UsageError("--power must be in 1..4");
  if (n < 0) throw UsageError("--n must be nonnegative");
  PrecisionCtx ctx = make_ctx(digits.value_or(default_digits()));
  auto un = static_cast<unsigned long>(n);
  PiScanRow row = limit_scan_pi(p, std::max(2UL, un), ctx).at(un);
  PiReport r;
  r.p = p;
  r.n = un;
  r.digits = ctx.digits;
  r.scaled_exact = row.scaled.to_string();
  r.scaled = row.scaled_value.to_sci(ctx.digits);
  r.pi_power = ExactConst::pi_power(p).evaluate(ctx.bits()).to_sci(ctx.digits);
  r.error = row.error_value.to_sci(ctx.digits);
  if (p <= 2) r.error_exact = (-row.error).to_string();
  return r;
}

inline void write_pi(std::ostream& os, const PiReport& r) {
  os << "power: " << r.p << '\n'
     << "n: " << r.n << '\n'
     << "scaled_exact: " << r.scaled_exact << '\n'
     << "scaled: " << r.scaled << '\n'
     << "pi^" << r.p << ": " << r.pi_power << '\n'
     << "abs_error: " << r.error << '\n';
  if (!r.error_exact.empty()) os << "pi^" << r.p << " - scaled: " << r.error_exact << '\n';
}

struct TableRow {
  unsigned long n = 0;
  std::string x;
  std::string exact;
  std::string decimal;
};

inline int table_power(const std::string& id) {
  if (id == "3.3a") return 1;
  if (id == "4.4a" || id == "4.3") return 2;
  if (id == "5.3") return 3;
  if (id == "6.3") return 4;
  throw UsageError("unsupported corollary '" + id + "'");
}

inline std::vector<TableRow> run_table(const std::string& corollary, std::optional<std::string> n_range,
                                       std::optional<std::string> x, std::optional<int> digits) {
  int p = table_power(corollary);
  PrecisionCtx ctx = make_ctx(digits.value_or(default_digits()));
  bool half_table = corollary == "3.3a" || corollary == "4.4a";
  std::vector<unsigned long> ns;
  XCase xc = half_table ? XCase::Half : XCase::One;
  if (x) {
    auto parsed = parse_xcase(*x);
    if (!parsed) throw UsageError("--x must be one of 1, 1/2, sqrt2/2, sqrt3/2");
    xc = *parsed;
  }
  if (half_table && !n_range) {
    for (const auto& [n, v] : half_argument_table(p)) ns.push_back(n);
  } else {
    Range r = parse_range(n_range.value_or("0..10"));
    for (long n = r.lo; n <= r.hi; ++n) ns.push_back(static_cast<unsigned long>(n));
  }
  std::vector<TableRow> rows;
  for (unsigned long n : ns) {
    ExactConst v = corollary_exact(p, n, xc);
    rows.push_back({n, std::string(xcase_token(xc)), v.to_string(), v.evaluate(ctx.bits()).to_sci(ctx.digits)});
  }
  return rows;
}

inline void write_table(std::ostream& os, const std::string& corollary, const std::vector<TableRow>& rows,
                        const std::string& format) {
  if (format == "json") {
    for (const auto& r : rows) {
      nlohmann::ordered_json j = {
          {"corollary", corollary}, {"n", r.n}, {"x", r.x}, {"exact", r.exact}, {"decimal", r.decimal}};
      os << j.dump() << '\n';
    }
  } else if (format == "csv") {
    os << "corollary,n,x,exact,decimal\n";
    for (const auto& r : rows)
      os << corollary << ',' << r.n << ',' << csv_field(r.x) << ',' << csv_field(r.exact) << ',' << r.decimal << '\n';
  } else if (format == "markdown") {
    os << "| n | x | exact | decimal |\n|---|---|---|---|\n";
    for (const auto& r : rows) os << "| " << r.n << " | " << r.x << " | " << r.exact << " | " << r.decimal << " |\n";
  } else {
    throw UsageError("--format must be json, csv or markdown");
  }
}

/// Exact value of a family at one (n, x).
inline std::string run_closed_form(const std::string& family, long n, const std::string& x) {
  static const std::vector<std::pair<std::string, int>> ids = {
      {"thm3.2", 1}, {"cor3.3", 1}, {"cor3.3a", 1}, {"thm4.2", 2}, {"cor4.3", 2}, {"cor4.4a", 2},
      {"thm5.2", 3}, {"cor5.3", 3}, {"thm6.2", 4}, {"cor6.3", 4}};
  auto it = std::find_if(ids.begin(), ids.end(), [&](const auto& e) { return e.first == family; });
  if (it == ids.end()) throw UsageError("unsupported family '" + family + "'");
  if (n < 0) throw UsageError("--n must be nonnegative");
  auto xc = parse_xcase(x);
  if (!xc) throw UsageError("--x must be one of 1, 1/2, sqrt2/2, sqrt3/2");
  return corollary_exact(it->second, static_cast<unsigned long>(n), *xc).to_string();
}

}  // namespace aseries::cli
