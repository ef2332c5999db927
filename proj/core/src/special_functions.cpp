#include "vwapgamma/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vwapgamma/error.hpp"

namespace vwapgamma {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Stirling remainder: ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], x >= 15.
double stirling_tail(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return inv *
         (1.0 / 12.0 +
          inv2 * (-1.0 / 360.0 +
                  inv2 * (1.0 / 1260.0 +
                          inv2 * (-1.0 / 1680.0 + inv2 * (1.0 / 1188.0 + inv2 * (-691.0 / 360360.0))))));
}

// ln x - psi(x) for x >= 10 (asymptotic series).
double digamma_tail(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return 0.5 * inv +
         inv2 * (1.0 / 12.0 -
                 inv2 * (1.0 / 120.0 -
                         inv2 * (1.0 / 252.0 -
                                 inv2 * (1.0 / 240.0 -
                                         inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
}

// u - log(1 + u), accurate when |u| is small.
double u_minus_log1p(double u) {
  if (std::fabs(u) > 0.1) return u - std::log1p(u);
  double term = u * u;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    const double contribution = term / k;
    sum += (k % 2 == 0) ? contribution : -contribution;
    if (std::fabs(contribution) <= kEps * std::fabs(sum)) break;
    term *= u;
  }
  return sum;
}

// x^a e^-x / Gamma(a), evaluated so that large a does not cancel.
double incomplete_gamma_prefactor(double a, double x) {
  if (x == 0.0) return 0.0;
  if (a < 10.0) return std::exp(a * std::log(x) - x - log_gamma(a));
  const double u = (x - a) / a;
  return std::sqrt(a / (2.0 * std::numbers::pi)) *
         std::exp(-a * u_minus_log1p(u) - stirling_tail(a));
}

// Series for P(a, x) without the prefactor: sum_k x^k / (a (a+1) ... (a+k)).
double lower_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) return sum;
  }
  throw numerical_error("gamma_p: series failed to converge");
}

// Continued fraction for Q(a, x) without the prefactor (modified Lentz).
double upper_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw numerical_error("gamma_q: continued fraction failed to converge");
}

void check_incomplete_args(double a, double x, const char* name) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw parameter_error(std::string(name) + ": shape must be positive and finite");
  }
  if (!(x >= 0.0)) throw parameter_error(std::string(name) + ": x must be non-negative");
}

}  // namespace

double normal_cdf(double x) noexcept {
  return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

double normal_pdf(double x) noexcept {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw parameter_error("log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
  double shift_log = 0.0;
  if (x < 15.0) {
    double product = 1.0;
    while (x < 15.0) {
      product *= x;
      x += 1.0;
    }
    shift_log = std::log(product);
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_tail(x) - shift_log;
}

double digamma(double x) {
  if (!(x > 0.0)) throw parameter_error("digamma: argument must be positive");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return std::log(x) - digamma_tail(x) - shift;
}

double log_minus_digamma(double x) {
  if (!(x > 0.0)) throw parameter_error("log_minus_digamma: argument must be positive");
  if (x >= 10.0) return digamma_tail(x);
  const double start = x;
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return digamma_tail(x) - std::log(x / start) + shift;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw parameter_error("trigamma: argument must be positive");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv + inv2 / 2.0 +
      inv * inv2 *
          (1.0 / 6.0 -
           inv2 * (1.0 / 30.0 -
                   inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * (5.0 / 66.0 - inv2 * 691.0 / 2730.0)))));
  return series + shift;
}

double gamma_p(double a, double x) {
  check_incomplete_args(a, x, "gamma_p");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return incomplete_gamma_prefactor(a, x) * lower_series(a, x);
  return 1.0 - incomplete_gamma_prefactor(a, x) * upper_fraction(a, x);
}

double gamma_q(double a, double x) {
  check_incomplete_args(a, x, "gamma_q");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - incomplete_gamma_prefactor(a, x) * lower_series(a, x);
  return incomplete_gamma_prefactor(a, x) * upper_fraction(a, x);
}

double gamma_cdf(double x, double shape, double scale) {
  if (!(scale > 0.0)) throw parameter_error("gamma_cdf: scale must be positive");
  if (x <= 0.0) return 0.0;
  return gamma_p(shape, x / scale);
}

}  // namespace vwapgamma
