#include "vwapgamma/vwap_moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "vwapgamma/error.hpp"

namespace vwapgamma {
namespace {

// The statistics every moment formula is assembled from, evaluated without
// the cancellation of E[A^2] - E[A]^2.
struct AverageStats {
  double mean = 0.0;        // E[A]
  double variance = 0.0;    // Var(A)
  double dispersion = 0.0;  // E[(1/N) sum S_i^2] - E[A^2]
};

AverageStats discrete_average_stats(const MarketParams& market, const AveragingGrid& grid) {
  const int n = grid.n_buckets;
  const double s2 = market.sigma * market.sigma;
  std::vector<double> drift(n);  // E S_i = S0 e^{r t_i}
  std::vector<double> vol(n);    // e^{sigma^2 t_i} - 1
  for (int i = 0; i < n; ++i) {
    const double t = grid.time(i + 1);
    drift[i] = market.s0 * std::exp(market.r * t);
    vol[i] = std::expm1(s2 * t);
  }

  double sum_drift = 0.0;
  double sum_diag = 0.0;   // sum_i m_i^2 g_i
  double sum_cross = 0.0;  // sum_j m_j sum_{i<j} m_i g_i
  double running = 0.0;
  for (int j = 0; j < n; ++j) {
    sum_drift += drift[j];
    sum_diag += drift[j] * drift[j] * vol[j];
    sum_cross += drift[j] * running;
    running += drift[j] * vol[j];
  }
  const double inv_n = 1.0 / n;
  AverageStats stats;
  stats.mean = sum_drift * inv_n;
  stats.variance = (sum_diag + 2.0 * sum_cross) * inv_n * inv_n;

  double drift_spread = 0.0;
  for (double m : drift) drift_spread += (m - stats.mean) * (m - stats.mean);
  stats.dispersion = drift_spread * inv_n + (sum_diag * inv_n - stats.variance);
  return stats;
}

// Divided difference exp[x_0, ..., x_n] of the exponential on sorted nodes.
// Close nodes are handled by the power series
//   exp[x_0..x_n] = e^c sum_m h_m(x - c) / (m + n)!
// where h_m is the complete homogeneous symmetric polynomial; well separated
// endpoints use the recursive definition.
double exp_divided_difference(std::span<const double> nodes) {
  const std::size_t order = nodes.size() - 1;
  const double spread = nodes.back() - nodes.front();
  if (spread <= 1.0) {
    constexpr int kTerms = 48;
    const double centre = 0.5 * (nodes.front() + nodes.back());
    std::array<double, kTerms> h{};
    h.fill(0.0);
    // h_m over the first node alone is (x_0 - c)^m.
    double power = 1.0;
    for (int m = 0; m < kTerms; ++m) {
      h[m] = power;
      power *= nodes[0] - centre;
    }
    for (std::size_t k = 1; k <= order; ++k) {
      const double y = nodes[k] - centre;
      for (int m = 1; m < kTerms; ++m) h[m] += y * h[m - 1];
    }
    double factorial = 1.0;
    for (std::size_t k = 2; k <= order; ++k) factorial *= static_cast<double>(k);
    double sum = 0.0;
    for (int m = 0; m < kTerms; ++m) {
      sum += h[m] / factorial;
      factorial *= static_cast<double>(m + 1 + order);
    }
    return std::exp(centre) * sum;
  }
  if (order == 1) {
    return std::exp(nodes[0]) * std::expm1(spread) / spread;
  }
  return (exp_divided_difference(nodes.subspan(1)) -
          exp_divided_difference(nodes.first(order))) /
         spread;
}

template <std::size_t N>
double exp_dd(std::array<double, N> nodes) {
  std::sort(nodes.begin(), nodes.end());
  return exp_divided_difference(nodes);
}

AverageStats continuous_average_stats(const MarketParams& market, double maturity) {
  // In units of T: a = rT, kappa = sigma^2 T, b = (2r + sigma^2) T.
  //   E[A]/S0              = exp[0, a]            = (e^{rT} - 1) / (rT)
  //   E[(1/T) int S^2]/S0^2 = exp[0, b]
  //   E[A^2]/S0^2           = 2 exp[0, a, b]
  //   Var(A)/S0^2           = 2 kappa exp[0, a, 2a, b]
  const double a = market.r * maturity;
  const double kappa = market.sigma * market.sigma * maturity;
  const double b = 2.0 * a + kappa;
  const double s0_sq = market.s0 * market.s0;

  AverageStats stats;
  stats.mean = market.s0 * exp_dd<2>({0.0, a});
  stats.variance = s0_sq * 2.0 * kappa * exp_dd<4>({0.0, a, 2.0 * a, b});
  stats.dispersion = s0_sq * (exp_dd<2>({0.0, b}) - 2.0 * exp_dd<3>({0.0, a, b}));
  return stats;
}

MomentPair assemble(const AverageStats& stats, double weight_count, double alpha,
                    MomentVariant variant) {
  MomentPair out{stats.mean, stats.variance};
  if (std::isinf(alpha)) return out;
  const double concentration = alpha * weight_count;
  if (variant == MomentVariant::exact) {
    out.m2 += stats.dispersion / (concentration + 1.0);
  } else {
    // Squared-expectation bracket: E[(1/N) sum S^2] - E[A]^2.
    out.m2 += (stats.dispersion + stats.variance) / concentration;
  }
  return out;
}

void check_same_buckets(const VolumeParams& volume, const AveragingGrid& grid) {
  detail::require(volume.n_buckets == grid.n_buckets,
                  "volume model has " + std::to_string(volume.n_buckets) +
                      " buckets but the averaging grid has " + std::to_string(grid.n_buckets));
}

}  // namespace

void validate(const MarketParams& market) {
  detail::require(market.s0 > 0.0 && std::isfinite(market.s0),
                  "spot must be positive, got " + std::to_string(market.s0));
  detail::require(std::isfinite(market.r), "rate must be finite");
  detail::require(market.sigma > 0.0 && std::isfinite(market.sigma),
                  "sigma must be positive, got " + std::to_string(market.sigma));
}

void validate(const ContinuousVolumeParams& volume) {
  detail::require(volume.alpha_tilde > 0.0,
                  "alpha_tilde must be positive, got " + std::to_string(volume.alpha_tilde));
  detail::require(volume.theta > 0.0 && std::isfinite(volume.theta),
                  "volume theta must be positive, got " + std::to_string(volume.theta));
}

GbmSumMoments gbm_sum_moments(const MarketParams& market, const AveragingGrid& grid) {
  validate(market);
  validate(grid);
  const int n = grid.n_buckets;
  const double r = market.r;
  const double s2 = market.sigma * market.sigma;

  double sum_first = 0.0;   // sum_i e^{r t_i}
  double sum_second = 0.0;  // sum_i e^{(2r + sigma^2) t_i}
  double sum_cross = 0.0;   // sum_j sum_{i<j} e^{r (t_i + t_j) + sigma^2 t_i}
  double running = 0.0;     // sum_{i<j} e^{(r + sigma^2) t_i}
  for (int j = 1; j <= n; ++j) {
    const double t = grid.time(j);
    sum_first += std::exp(r * t);
    sum_second += std::exp((2.0 * r + s2) * t);
    sum_cross += std::exp(r * t) * running;
    running += std::exp((r + s2) * t);
  }
  const double s0 = market.s0;
  const double nn = n;
  return {s0 / nn * sum_first, s0 * s0 / nn * sum_second,
          s0 * s0 / (nn * nn) * (sum_second + 2.0 * sum_cross)};
}

GbmSumMoments gbm_sum_moments_naive(const MarketParams& market, const AveragingGrid& grid) {
  validate(market);
  validate(grid);
  const int n = grid.n_buckets;
  const double r = market.r;
  const double s2 = market.sigma * market.sigma;
  const double dt = grid.dt();

  double sum_first = 0.0;
  double sum_second = 0.0;
  double sum_cross = 0.0;
  for (int i = 1; i <= n; ++i) {
    sum_first += std::exp(r * i * dt);
    sum_second += std::exp((2.0 * r + s2) * i * dt);
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) sum_cross += std::exp(r * (i + j) * dt + s2 * i * dt);
  }
  const double s0 = market.s0;
  const double nn = n;
  return {s0 / nn * sum_first, s0 * s0 / nn * sum_second,
          s0 * s0 / (nn * nn) * (sum_second + 2.0 * sum_cross)};
}

MomentPair arithmetic_asian_moments(const MarketParams& market, const AveragingGrid& grid) {
  validate(market);
  validate(grid);
  const AverageStats stats = discrete_average_stats(market, grid);
  return {stats.mean, stats.variance};
}

MomentPair vwap_moments_discrete(const MarketParams& market, const VolumeParams& volume,
                                 const AveragingGrid& grid, MomentVariant variant) {
  validate(market);
  validate(volume);
  validate(grid);
  check_same_buckets(volume, grid);
  return assemble(discrete_average_stats(market, grid), grid.n_buckets, volume.alpha, variant);
}

MomentPair vwap_moments_discrete_exact(const MarketParams& market, const VolumeParams& volume,
                                       const AveragingGrid& grid) {
  return vwap_moments_discrete(market, volume, grid, MomentVariant::exact);
}

MomentPair vwap_moments_discrete_stace(const MarketParams& market, const VolumeParams& volume,
                                       const AveragingGrid& grid) {
  return vwap_moments_discrete(market, volume, grid, MomentVariant::stace);
}

MomentPair vwap_moments_continuous(const MarketParams& market, const ContinuousVolumeParams& volume,
                                   double maturity, MomentVariant variant) {
  validate(market);
  validate(volume);
  detail::require(maturity > 0.0 && std::isfinite(maturity),
                  "maturity must be positive, got " + std::to_string(maturity));
  // alpha_tilde * T plays the role of alpha * N.
  return assemble(continuous_average_stats(market, maturity), maturity, volume.alpha_tilde,
                  variant);
}

MomentPair arithmetic_asian_moments_continuous(const MarketParams& market, double maturity) {
  validate(market);
  detail::require(maturity > 0.0 && std::isfinite(maturity),
                  "maturity must be positive, got " + std::to_string(maturity));
  const AverageStats stats = continuous_average_stats(market, maturity);
  return {stats.mean, stats.variance};
}

double vwap_ratio_asymptotic(const VolumeParams& volume, MomentVariant variant) {
  validate(volume);
  if (std::isinf(volume.alpha)) return 1.0;
  const double a = volume.alpha;
  const double n = volume.n_buckets;
  const double numerator = 3.0 + a + 2.0 * a * n;
  if (variant == MomentVariant::exact) {
    return std::sqrt(n * numerator / ((1.0 + 2.0 * n) * (1.0 + a * n)));
  }
  return std::sqrt(numerator / (a + 2.0 * a * n));
}

}  // namespace vwapgamma
