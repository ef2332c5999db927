#pragma once

namespace vwapgamma {

/// Standard normal CDF via the complementary error function.
double normal_cdf(double x) noexcept;
double normal_pdf(double x) noexcept;

/// ln Gamma(x) for x > 0. Recurrence shift to x >= 15 followed by the
/// Stirling series; does not touch the global `signgam` and is thread-safe.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

/// ln(x) - psi(x), x > 0, without the cancellation of the naive difference
/// at large x. This is the left-hand side of the gamma MLE shape equation.
double log_minus_digamma(double x);

/// psi'(x), x > 0.
double trigamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Series for x < a + 1, Lentz continued fraction otherwise; relative
/// accuracy around 1e-14 in the double range.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
/// directly so that tails keep relative precision.
double gamma_q(double a, double x);

/// CDF of Gamma(shape, scale) at x.
double gamma_cdf(double x, double shape, double scale);

}  // namespace vwapgamma
