#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vwapgamma/volume_series.hpp"

namespace vwapgamma {

/// Sums of non-overlapping runs of `level` consecutive values; a trailing
/// partial run is dropped.
std::vector<double> amalgamate(std::span<const double> volumes, int level);

/// Amalgamation of a bar series. For level <= bars_per_day runs stay inside
/// one trading day and each day's partial run is dropped. Larger levels run
/// across day boundaries and only the final partial run is dropped.
std::vector<double> amalgamate(const VolumeSeries& series, int level);

struct GammaFit {
  double alpha_hat = 0.0;
  double theta_hat = 0.0;
  double log_likelihood = 0.0;
};

/// Maximum-likelihood Gamma(alpha, theta) fit. Needs at least two positive,
/// not all equal, values; otherwise throws data_error.
GammaFit fit_gamma_mle(std::span<const double> data);

struct GofResult {
  double p_ad = 1.0;
  double p_ks = 1.0;
  double stat_ad = 0.0;  // Anderson-Darling A^2
  double stat_ks = 0.0;  // Kolmogorov-Smirnov D_n
};

/// A^2 and D_n of `data` against Gamma(alpha, theta). CDF values are clamped
/// to [1e-15, 1 - 1e-15]. p-values are left at 1.
GofResult gof_statistics(std::span<const double> data, double alpha, double theta);

/// Statistics plus parametric-bootstrap p-values: each replicate draws
/// n values from Gamma(alpha, theta), refits, and recomputes both statistics.
/// p = (1 + #{replicate stat >= observed}) / (n_boot + 1). Replicate b uses
/// RngStream(seed, b), so the result does not depend on `workers`.
GofResult gof_pvalues(std::span<const double> data, double alpha, double theta, int n_boot,
                      std::uint64_t seed = 1, unsigned workers = 0);

/// Sample autocorrelation at `lag`. Needs n > lag + 1 and a non-constant
/// series; otherwise throws data_error.
double autocorrelation(std::span<const double> data, int lag = 1);

struct BucketCorrelation {
  int bucket_index = 0;  // 1-based position within the trading day
  double correlation = 0.0;
  int n_days = 0;
};

/// Correlation across days between the within-day cumulative volume up to
/// bucket i and the bucket-i volume. Buckets are ranked by time of day; days
/// missing bucket i are skipped for that bucket. Buckets with fewer than 3
/// observations or no variation are omitted. Needs 10 complete days.
std::vector<BucketCorrelation> intraday_cum_incr_correlation(const VolumeSeries& series);

struct GofReport {
  int level = 0;
  double theta_hat = 0.0;
  double alpha_hat = 0.0;
  double alpha_per_l = 0.0;
  double autocorr = 0.0;
  double p_ad = 1.0;
  double p_ks = 1.0;
  int n_points = 0;
};

/// One report per level: amalgamate, fit, bootstrap test, autocorrelation.
/// Throws data_error ("insufficient data") when a level leaves fewer than
/// lag + 2 points.
std::vector<GofReport> build_gof_table(const VolumeSeries& series, std::span<const int> levels,
                                       int n_boot, std::uint64_t seed = 1, int lag = 1,
                                       unsigned workers = 0);

}  // namespace vwapgamma
