#pragma once

#include "vwapgamma/volume_model.hpp"

namespace vwapgamma {

/// Geometric Brownian motion dS = r S dt + sigma S dW under the pricing
/// measure.
struct MarketParams {
  double s0 = 100.0;
  double r = 0.0;
  double sigma = 0.2;
};

/// Mean and variance (central second moment) of an average price.
struct MomentPair {
  double m1 = 0.0;
  double m2 = 0.0;
};

/// Gamma-process volume for the continuous-time limit; alpha_tilde is the
/// shape rate per year, so alpha_tilde * T = alpha * N.
struct ContinuousVolumeParams {
  double alpha_tilde = 1.0;
  double theta = 1.0;
};

enum class MomentVariant { exact, stace };

/// Raw expectations of the equally weighted GBM average
/// A = (1/N) sum_i S_{t_i}.
struct GbmSumMoments {
  double mean_avg = 0.0;     // E[A]
  double mean_sq_avg = 0.0;  // E[(1/N) sum_i S_i^2]
  double mean_avg_sq = 0.0;  // E[A^2]
};

void validate(const MarketParams& market);
void validate(const ContinuousVolumeParams& volume);

/// O(N) evaluation; the double sum over i < j uses a running accumulator.
GbmSumMoments gbm_sum_moments(const MarketParams& market, const AveragingGrid& grid);

/// Direct O(N^2) summation of the same three expectations. Reference path
/// for tests and benchmarks.
GbmSumMoments gbm_sum_moments_naive(const MarketParams& market, const AveragingGrid& grid);

/// Moments of the plain average (the alpha -> infinity limit).
MomentPair arithmetic_asian_moments(const MarketParams& market, const AveragingGrid& grid);

/// VWAP moments under i.i.d. Gamma(alpha, theta) bucket volumes:
///   M1 = E[A]
///   M2 = Var(A) + (E[(1/N) sum S_i^2] - E[A^2]) / (alpha N + 1)
MomentPair vwap_moments_discrete_exact(const MarketParams& market, const VolumeParams& volume,
                                       const AveragingGrid& grid);

/// Second-order ratio-expansion approximation:
///   M2 = Var(A) + (E[(1/N) sum S_i^2] - E[A]^2) / (alpha N)
MomentPair vwap_moments_discrete_stace(const MarketParams& market, const VolumeParams& volume,
                                       const AveragingGrid& grid);

MomentPair vwap_moments_discrete(const MarketParams& market, const VolumeParams& volume,
                                 const AveragingGrid& grid, MomentVariant variant);

/// Continuous averaging (1/T) int_0^T S_t dZ_t / Z_T with Z a gamma process.
MomentPair vwap_moments_continuous(const MarketParams& market, const ContinuousVolumeParams& volume,
                                   double maturity, MomentVariant variant);

/// Moments of (1/T) int_0^T S_t dt.
MomentPair arithmetic_asian_moments_continuous(const MarketParams& market, double maturity);

/// Leading-order (T/N -> 0) ratio sigma_VWAP / sigma_AA:
///   exact: sqrt(N (3 + a + 2aN) / ((1 + 2N)(1 + aN)))
///   stace: sqrt((3 + a + 2aN) / (a + 2aN))
double vwap_ratio_asymptotic(const VolumeParams& volume, MomentVariant variant);

}  // namespace vwapgamma
