#include "vwapgamma/volume_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "vwapgamma/error.hpp"
#include "vwapgamma/parallel.hpp"
#include "vwapgamma/rng.hpp"
#include "vwapgamma/special_functions.hpp"

namespace vwapgamma {
namespace {

constexpr double kCdfFloor = 1e-15;

void require_level(int level) {
  detail::require(level >= 1, "amalgamation level must be at least 1, got " +
                                  std::to_string(level));
}

// Statistics on data already sorted ascending.
GofResult sorted_statistics(std::span<const double> sorted, double alpha, double theta) {
  const std::size_t n = sorted.size();
  const double nn = static_cast<double>(n);
  std::vector<double> cdf(n);
  for (std::size_t i = 0; i < n; ++i) {
    cdf[i] = std::clamp(gamma_cdf(sorted[i], alpha, theta), kCdfFloor, 1.0 - kCdfFloor);
  }
  GofResult out;
  double ad_sum = 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    ad_sum += (2.0 * k - 1.0) * (std::log(cdf[i]) + std::log1p(-cdf[n - 1 - i]));
    d = std::max({d, k / nn - cdf[i], cdf[i] - (k - 1.0) / nn});
  }
  out.stat_ad = -nn - ad_sum / nn;
  out.stat_ks = d;
  return out;
}

void require_positive_data(std::span<const double> data) {
  for (double x : data) {
    if (!(x > 0.0) || !std::isfinite(x)) throw data_error("volume data must be positive and finite");
  }
}

}  // namespace

std::vector<double> amalgamate(std::span<const double> volumes, int level) {
  require_level(level);
  std::vector<double> out;
  out.reserve(volumes.size() / level);
  const std::size_t step = static_cast<std::size_t>(level);
  for (std::size_t start = 0; start + step <= volumes.size(); start += step) {
    double sum = 0.0;
    for (std::size_t k = 0; k < step; ++k) sum += volumes[start + k];
    out.push_back(sum);
  }
  return out;
}

std::vector<double> amalgamate(const VolumeSeries& series, int level) {
  require_level(level);
  std::vector<double> volumes;
  volumes.reserve(series.bars.size());
  if (level > series.bars_per_day) {
    for (const VolumeBar& bar : series.bars) volumes.push_back(bar.volume);
    return amalgamate(volumes, level);
  }
  std::vector<double> out;
  std::size_t i = 0;
  while (i < series.bars.size()) {
    const auto day = trading_day(series.bars[i].timestamp);
    volumes.clear();
    while (i < series.bars.size() && trading_day(series.bars[i].timestamp) == day) {
      volumes.push_back(series.bars[i].volume);
      ++i;
    }
    const std::vector<double> groups = amalgamate(volumes, level);
    out.insert(out.end(), groups.begin(), groups.end());
  }
  return out;
}

GammaFit fit_gamma_mle(std::span<const double> data) {
  if (data.size() < 2) throw data_error("gamma fit needs at least 2 points, got " +
                                        std::to_string(data.size()));
  require_positive_data(data);
  const double n = static_cast<double>(data.size());
  double sum = 0.0;
  for (double x : data) sum += x;
  const double mean = sum / n;

  // s = ln(mean) - mean(ln x), summed as u - log1p(u) >= 0 with u = x/mean - 1
  // to avoid cancellation when the data are nearly constant.
  double s = 0.0;
  double sum_log = 0.0;
  for (double x : data) {
    const double u = x / mean - 1.0;
    s += u - std::log1p(u);
    sum_log += std::log(x);
  }
  s /= n;
  if (!(s > 0.0)) throw data_error("gamma fit: data are all equal");

  double alpha = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
  for (int iter = 0; iter < 100; ++iter) {
    const double f = log_minus_digamma(alpha) - s;
    const double df = 1.0 / alpha - trigamma(alpha);
    double next = alpha - f / df;
    if (!(next > 0.0)) next = 0.5 * alpha;
    const double change = std::fabs(next - alpha) / alpha;
    alpha = next;
    if (change < 1e-10) break;
  }
  if (!std::isfinite(alpha)) throw numerical_error("gamma fit did not converge");

  GammaFit fit;
  fit.alpha_hat = alpha;
  fit.theta_hat = mean / alpha;
  fit.log_likelihood = (alpha - 1.0) * sum_log - sum / fit.theta_hat - n * log_gamma(alpha) -
                       n * alpha * std::log(fit.theta_hat);
  return fit;
}

GofResult gof_statistics(std::span<const double> data, double alpha, double theta) {
  if (data.empty()) throw data_error("goodness-of-fit test needs data");
  require_positive_data(data);
  detail::require(alpha > 0.0 && theta > 0.0, "gamma parameters must be positive");
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_statistics(sorted, alpha, theta);
}

GofResult gof_pvalues(std::span<const double> data, double alpha, double theta, int n_boot,
                      std::uint64_t seed, unsigned workers) {
  detail::require(n_boot >= 100, "n_boot must be at least 100, got " + std::to_string(n_boot));
  GofResult observed = gof_statistics(data, alpha, theta);
  const std::size_t n = data.size();

  std::vector<GofResult> replicates(static_cast<std::size_t>(n_boot));
  parallel_for(replicates.size(), workers, [&](std::size_t b) {
    RngStream stream(seed, b);
    std::vector<double> sample(n);
    for (double& x : sample) {
      x = std::max(theta * stream.standard_gamma(alpha), std::numeric_limits<double>::min());
    }
    GammaFit refit;
    try {
      refit = fit_gamma_mle(sample);
    } catch (const data_error&) {
      // A degenerate replicate cannot be refitted; count it as extreme.
      replicates[b] = {1.0, 1.0, std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
      return;
    }
    std::sort(sample.begin(), sample.end());
    replicates[b] = sorted_statistics(sample, refit.alpha_hat, refit.theta_hat);
  });

  int exceed_ad = 0;
  int exceed_ks = 0;
  for (const GofResult& r : replicates) {
    exceed_ad += r.stat_ad >= observed.stat_ad;
    exceed_ks += r.stat_ks >= observed.stat_ks;
  }
  observed.p_ad = (1.0 + exceed_ad) / (n_boot + 1.0);
  observed.p_ks = (1.0 + exceed_ks) / (n_boot + 1.0);
  return observed;
}

double autocorrelation(std::span<const double> data, int lag) {
  detail::require(lag >= 1, "autocorrelation lag must be at least 1");
  const std::size_t k = static_cast<std::size_t>(lag);
  if (data.size() <= k + 1) {
    throw data_error("autocorrelation at lag " + std::to_string(lag) + " needs more than " +
                     std::to_string(k + 1) + " points, got " + std::to_string(data.size()));
  }
  double mean = 0.0;
  for (double x : data) mean += x;
  mean /= static_cast<double>(data.size());
  double denom = 0.0;
  for (double x : data) denom += (x - mean) * (x - mean);
  if (!(denom > 0.0)) throw data_error("autocorrelation of a constant series is undefined");
  double num = 0.0;
  for (std::size_t i = 0; i + k < data.size(); ++i) num += (data[i] - mean) * (data[i + k] - mean);
  return std::clamp(num / denom, -1.0, 1.0);
}

std::vector<BucketCorrelation> intraday_cum_incr_correlation(const VolumeSeries& series) {
  validate(series);
  using std::chrono::seconds;

  // Bucket index = rank of the bar's time of day among all times seen.
  std::map<seconds, int> slots;
  for (const VolumeBar& bar : series.bars) {
    slots.emplace(bar.timestamp - trading_day(bar.timestamp), 0);
  }
  int rank = 0;
  for (auto& [tod, index] : slots) index = rank++;
  const std::size_t n_slots = slots.size();

  // Per bucket: (cumulative, increment) pairs, one per day that has the bucket.
  std::vector<std::vector<std::pair<double, double>>> pairs(n_slots);
  int complete_days = 0;
  std::size_t i = 0;
  while (i < series.bars.size()) {
    const auto day = trading_day(series.bars[i].timestamp);
    double cumulative = 0.0;
    int count = 0;
    for (; i < series.bars.size() && trading_day(series.bars[i].timestamp) == day; ++i) {
      const VolumeBar& bar = series.bars[i];
      cumulative += bar.volume;
      pairs[slots.at(bar.timestamp - day)].emplace_back(cumulative, bar.volume);
      ++count;
    }
    complete_days += count >= series.bars_per_day;
  }
  if (complete_days < 10) {
    throw data_error("intraday correlation needs at least 10 complete trading days, got " +
                     std::to_string(complete_days));
  }

  std::vector<BucketCorrelation> out;
  for (std::size_t b = 0; b < n_slots; ++b) {
    const auto& obs = pairs[b];
    if (obs.size() < 3) continue;
    const double m = static_cast<double>(obs.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : obs) {
      mx += x;
      my += y;
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& [x, y] : obs) {
      sxx += (x - mx) * (x - mx);
      syy += (y - my) * (y - my);
      sxy += (x - mx) * (y - my);
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) continue;
    out.push_back({static_cast<int>(b) + 1, std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0),
                   static_cast<int>(obs.size())});
  }
  return out;
}

std::vector<GofReport> build_gof_table(const VolumeSeries& series, std::span<const int> levels,
                                       int n_boot, std::uint64_t seed, int lag, unsigned workers) {
  detail::require(!levels.empty(), "at least one amalgamation level is required");
  validate(series);
  std::vector<GofReport> table;
  table.reserve(levels.size());
  for (int level : levels) {
    const std::vector<double> points = amalgamate(series, level);
    if (points.size() < static_cast<std::size_t>(lag) + 2) {
      throw data_error("insufficient data: level " + std::to_string(level) + " leaves " +
                       std::to_string(points.size()) + " amalgamated point(s)");
    }
    const GammaFit fit = fit_gamma_mle(points);
    const GofResult gof = gof_pvalues(points, fit.alpha_hat, fit.theta_hat, n_boot, seed, workers);
    GofReport row;
    row.level = level;
    row.theta_hat = fit.theta_hat;
    row.alpha_hat = fit.alpha_hat;
    row.alpha_per_l = fit.alpha_hat / level;
    row.autocorr = autocorrelation(points, lag);
    row.p_ad = gof.p_ad;
    row.p_ks = gof.p_ks;
    row.n_points = static_cast<int>(points.size());
    table.push_back(row);
  }
  return table;
}

}  // namespace vwapgamma
