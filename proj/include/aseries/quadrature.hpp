#pragma once

// Double-precision oracle for I_nu^(p)(x) = int_0^x t^nu arcsin^p(t) dt.
// With t = sin(theta) the integrand becomes theta^p sin^nu(theta) cos(theta),
// which is smooth on the whole range, including x = 1.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aseries {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
};

namespace detail {

inline QuadResult integrate_theta(int p, unsigned long nu, double theta0, double theta1) {
  QuadResult r;
  auto integrand = [&](double th) {
    ++r.evaluations;
    return std::pow(th, p) * std::pow(std::sin(th), static_cast<double>(nu)) * std::cos(th);
  };
  double l1 = 0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, theta0, theta1, 15, 1e-14,
                                                                           &r.error_estimate, &l1);
  return r;
}

inline void check_moment_args(int p, double x) {
  if (p < 1 || p > 4) throw std::invalid_argument("integrate_moment: p must be in 1..4");
  if (!(x > 0) || x > 1) throw std::domain_error("integrate_moment: x must lie in (0, 1]");
}

}  // namespace detail

/// Adaptive 61-point Gauss-Kronrod over [0, arcsin x].
inline QuadResult integrate_moment(int p, unsigned long nu, double x) {
  detail::check_moment_args(p, x);
  return detail::integrate_theta(p, nu, 0.0, std::asin(x));
}

/// int_{x0}^{x1} t^nu arcsin^p(t) dt for 0 <= x0 <= x1 <= 1.
inline QuadResult integrate_moment_range(int p, unsigned long nu, double x0, double x1) {
  detail::check_moment_args(p, x1);
  if (x0 < 0 || x0 > x1) throw std::domain_error("integrate_moment_range: need 0 <= x0 <= x1");
  return detail::integrate_theta(p, nu, std::asin(x0), std::asin(x1));
}

}  // namespace aseries
