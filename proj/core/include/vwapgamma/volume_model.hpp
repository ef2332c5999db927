#pragma once

namespace vwapgamma {

/// I.i.d. gamma bucket volumes V_i ~ Gamma(alpha, theta), i = 1..n_buckets.
///
/// alpha is the shape per averaging bucket and scales linearly with the
/// bucket length. alpha = +infinity is accepted and denotes the degenerate
/// limit in which all normalized weights equal 1/N (arithmetic averaging).
struct VolumeParams {
  double alpha = 1.0;
  double theta = 1.0;
  int n_buckets = 1;
};

/// Equidistant fixing dates t_i = i * dt, i = 1..n_buckets, with t_N = T.
struct AveragingGrid {
  double maturity = 1.0;
  int n_buckets = 1;

  double dt() const noexcept { return maturity / n_buckets; }
  double time(int i) const noexcept { return maturity * i / n_buckets; }
};

/// Moments of the symmetric Dirichlet weights X_i = V_i / sum_j V_j.
struct DirichletMoments {
  double e_x = 0.0;       // E X_i
  double e_x2 = 0.0;      // E X_i^2
  double var_x = 0.0;     // Var X_i
  double e_xixj = 0.0;    // E X_i X_j, i != j
  double cov_xixj = 0.0;  // Cov(X_i, X_j), i != j
};

void validate(const VolumeParams& params);
void validate(const AveragingGrid& grid);

/// Closed-form moments of D(alpha, ..., alpha) in N dimensions.
DirichletMoments dirichlet_moments(const VolumeParams& params);

}  // namespace vwapgamma
