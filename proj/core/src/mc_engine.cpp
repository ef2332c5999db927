#include "vwapgamma/mc_engine.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "vwapgamma/error.hpp"
#include "vwapgamma/parallel.hpp"

namespace vwapgamma {
namespace {

// Per-run constants shared read-only by all blocks.
struct PathModel {
  double s0;
  double log_drift;  // (r - sigma^2 / 2) dt
  double log_vol;    // sigma sqrt(dt)
  double alpha;
  bool degenerate_volume;
  int n_buckets;

  PathModel(const MarketParams& market, const VolumeParams& volume, const AveragingGrid& grid)
      : s0(market.s0),
        log_drift((market.r - 0.5 * market.sigma * market.sigma) * grid.dt()),
        log_vol(market.sigma * std::sqrt(grid.dt())),
        alpha(volume.alpha),
        degenerate_volume(std::isinf(volume.alpha)),
        n_buckets(grid.n_buckets) {}

  // Volumes enter only through normalized weights, so theta is not applied.
  PathAverages run(RngStream& stream) const {
    PathAverages out;
    double spot = s0;
    double price_sum = 0.0;
    double weighted_sum = 0.0;
    double volume_sum = 0.0;
    for (int i = 0; i < n_buckets; ++i) {
      spot *= std::exp(log_drift + log_vol * stream.standard_normal());
      price_sum += spot;
      if (!degenerate_volume) {
        double v = stream.standard_gamma(alpha);
        if (v < std::numeric_limits<double>::min()) {
          v = std::numeric_limits<double>::min();
          ++out.clamped_volumes;
        }
        weighted_sum += spot * v;
        volume_sum += v;
      }
    }
    out.arith_avg = price_sum / n_buckets;
    out.vwap = degenerate_volume ? out.arith_avg : weighted_sum / volume_sum;
    return out;
  }
};

double payoff(double average, const OptionSpec& spec) {
  return spec.kind == OptionKind::call ? std::max(average - spec.strike, 0.0)
                                       : std::max(spec.strike - average, 0.0);
}

// Compensated power sums of one block. Averages are centred at a fixed
// constant so that the fourth-order sums do not cancel.
struct Accumulator {
  enum Index {
    kPv, kPv2, kPa, kPa2, kPvPa,
    kYv, kYv2, kYv3, kYv4,
    kYa, kYa2, kYa3, kYa4,
    kYvYa, kYv2Ya, kYvYa2, kYv2Ya2,
    kCount
  };
  std::array<CompensatedSum, kCount> sums{};
  std::int64_t paths = 0;
  std::int64_t clamped = 0;

  void add(double pv, double pa, double yv, double ya) {
    const double yv2 = yv * yv;
    const double ya2 = ya * ya;
    sums[kPv].add(pv);
    sums[kPv2].add(pv * pv);
    sums[kPa].add(pa);
    sums[kPa2].add(pa * pa);
    sums[kPvPa].add(pv * pa);
    sums[kYv].add(yv);
    sums[kYv2].add(yv2);
    sums[kYv3].add(yv2 * yv);
    sums[kYv4].add(yv2 * yv2);
    sums[kYa].add(ya);
    sums[kYa2].add(ya2);
    sums[kYa3].add(ya2 * ya);
    sums[kYa4].add(ya2 * ya2);
    sums[kYvYa].add(yv * ya);
    sums[kYv2Ya].add(yv2 * ya);
    sums[kYvYa2].add(yv * ya2);
    sums[kYv2Ya2].add(yv2 * ya2);
    ++paths;
  }

  void merge(const Accumulator& other) {
    for (int k = 0; k < kCount; ++k) sums[k].add(other.sums[k].value());
    paths += other.paths;
    clamped += other.clamped;
  }

  double mean(Index k) const { return sums[k].value() / static_cast<double>(paths); }
};

McEstimate make_estimate(double sum, double sum_sq, std::int64_t n) {
  const double nn = static_cast<double>(n);
  const double mean = sum / nn;
  double variance = 0.0;
  if (n > 1) variance = std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0));
  return {mean, std::sqrt(variance / nn), n};
}

double moment_matched_vol(double mean, double variance, double maturity) {
  return std::sqrt(std::log1p(variance / (mean * mean)) / maturity);
}

}  // namespace

void validate(const McConfig& config) {
  detail::require(config.n_paths >= 1, "n_paths must be at least 1");
  detail::require(config.block_size >= 1, "block_size must be at least 1");
  detail::require(config.volume_theta > 0.0, "volume theta must be positive");
}

PathAverages simulate_path(RngStream& stream, const MarketParams& market,
                           const VolumeParams& volume, const AveragingGrid& grid) {
  validate(market);
  validate(volume);
  validate(grid);
  detail::require(volume.n_buckets == grid.n_buckets,
                  "volume model and averaging grid bucket counts differ");
  return PathModel(market, volume, grid).run(stream);
}

McJointResult mc_simulate(const MarketParams& market, const VolumeParams& volume,
                          const AveragingGrid& grid, const OptionSpec& spec,
                          const McConfig& config) {
  validate(market);
  validate(volume);
  validate(grid);
  validate(spec);
  validate(config);
  detail::require(volume.n_buckets == grid.n_buckets,
                  "volume model and averaging grid bucket counts differ");
  detail::require(std::fabs(grid.maturity - spec.maturity) <= 1e-12 * spec.maturity,
                  "averaging grid maturity does not match the option maturity");

  const PathModel model(market, volume, grid);
  const double discount = std::exp(-market.r * spec.maturity);
  const double centre =
      market.s0 * std::exp(market.r * grid.maturity * (grid.n_buckets + 1.0) / (2.0 * grid.n_buckets));

  const std::int64_t n_blocks = (config.n_paths + config.block_size - 1) / config.block_size;
  std::vector<Accumulator> blocks(static_cast<std::size_t>(n_blocks));
  parallel_for(blocks.size(), config.workers, [&](std::size_t b) {
    const std::int64_t first = static_cast<std::int64_t>(b) * config.block_size;
    const std::int64_t last = std::min(config.n_paths, first + config.block_size);
    RngStream stream(config.seed, static_cast<std::uint64_t>(b));
    Accumulator& acc = blocks[b];
    for (std::int64_t p = first; p < last; ++p) {
      const PathAverages path = model.run(stream);
      acc.clamped += path.clamped_volumes;
      acc.add(discount * payoff(path.vwap, spec), discount * payoff(path.arith_avg, spec),
              path.vwap - centre, path.arith_avg - centre);
    }
  });

  Accumulator total;
  for (const Accumulator& block : blocks) total.merge(block);
  using A = Accumulator;
  const std::int64_t n = total.paths;
  const double nn = static_cast<double>(n);

  McJointResult out;
  out.vwap = make_estimate(total.sums[A::kPv].value(), total.sums[A::kPv2].value(), n);
  out.asian = make_estimate(total.sums[A::kPa].value(), total.sums[A::kPa2].value(), n);
  if (n > 1) {
    out.payoff_covariance =
        (total.sums[A::kPvPa].value() - nn * out.vwap.price * out.asian.price) / (nn - 1.0);
  }
  out.clamped_volumes = total.clamped;

  const double mu_v = total.mean(A::kYv);
  const double nu_v = total.mean(A::kYv2);
  const double mu_a = total.mean(A::kYa);
  const double nu_a = total.mean(A::kYa2);
  const double bessel = n > 1 ? nn / (nn - 1.0) : 1.0;
  out.vwap_moments = {centre + mu_v, std::max(0.0, nu_v - mu_v * mu_v) * bessel};
  out.asian_moments = {centre + mu_a, std::max(0.0, nu_a - mu_a * mu_a) * bessel};

  const double vol_v = moment_matched_vol(out.vwap_moments.m1, out.vwap_moments.m2, spec.maturity);
  const double vol_a = moment_matched_vol(out.asian_moments.m1, out.asian_moments.m2, spec.maturity);
  if (std::isinf(volume.alpha)) {
    // Both averages are the same number on every path.
    out.moment_ratio = 1.0;
    out.moment_ratio_std_error = 0.0;
  } else if (vol_a > 0.0 && vol_v > 0.0) {
    out.moment_ratio = vol_v / vol_a;

    // Delta method on ln r = ln sqrt(L_v) - ln sqrt(L_a), L = ln(E X^2) - 2 ln E X,
    // as a function of the centred moments (mu, nu) of each average.
    auto gradient = [centre](double mu, double nu) {
      const double m = centre + mu;
      const double q = centre * centre + 2.0 * centre * mu + nu;
      const double level = std::log(q) - 2.0 * std::log(m);
      return std::array<double, 2>{(2.0 * centre / q - 2.0 / m) / (2.0 * level),
                                   1.0 / (q * 2.0 * level)};
    };
    const auto gv = gradient(mu_v, nu_v);
    const auto ga = gradient(mu_a, nu_a);
    const std::array<double, 4> g{gv[0], gv[1], -ga[0], -ga[1]};
    const std::array<double, 4> means{mu_v, nu_v, mu_a, nu_a};
    // E[z_i z_j] for z = (y_v, y_v^2, y_a, y_a^2).
    const double e[4][4] = {
        {total.mean(A::kYv2), total.mean(A::kYv3), total.mean(A::kYvYa), total.mean(A::kYvYa2)},
        {total.mean(A::kYv3), total.mean(A::kYv4), total.mean(A::kYv2Ya), total.mean(A::kYv2Ya2)},
        {total.mean(A::kYvYa), total.mean(A::kYv2Ya), total.mean(A::kYa2), total.mean(A::kYa3)},
        {total.mean(A::kYvYa2), total.mean(A::kYv2Ya2), total.mean(A::kYa3), total.mean(A::kYa4)},
    };
    double variance = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) variance += g[i] * g[j] * (e[i][j] - means[i] * means[j]);
    }
    out.moment_ratio_std_error = out.moment_ratio * std::sqrt(std::max(0.0, variance) / nn);
  }
  return out;
}

McEstimate mc_price(const MarketParams& market, const VolumeParams& volume,
                    const AveragingGrid& grid, const OptionSpec& spec, const McConfig& config,
                    AverageKind which) {
  const McJointResult joint = mc_simulate(market, volume, grid, spec, config);
  return which == AverageKind::vwap ? joint.vwap : joint.asian;
}

RatioRow closed_form_ratio_row(const MarketParams& market, const AveragingGrid& grid,
                               double alpha) {
  const VolumeParams volume{alpha, 1.0, grid.n_buckets};
  const double maturity = grid.maturity;
  const double vol_asian =
      match_moments_to_black(arithmetic_asian_moments(market, grid), maturity).effective_vol;
  const double vol_exact =
      match_moments_to_black(vwap_moments_discrete_exact(market, volume, grid), maturity)
          .effective_vol;
  const double vol_stace =
      match_moments_to_black(vwap_moments_discrete_stace(market, volume, grid), maturity)
          .effective_vol;

  RatioRow row;
  row.alpha = alpha;
  row.inv_alpha = std::isinf(alpha) ? 0.0 : 1.0 / alpha;
  row.r_exact = vol_exact / vol_asian;
  row.r_stace = vol_stace / vol_asian;
  row.r_exact_asymptotic = vwap_ratio_asymptotic(volume, MomentVariant::exact);
  row.r_stace_asymptotic = vwap_ratio_asymptotic(volume, MomentVariant::stace);
  row.r_mc = std::numeric_limits<double>::quiet_NaN();
  row.r_mc_std_error = std::numeric_limits<double>::quiet_NaN();
  row.r_mc_price = std::numeric_limits<double>::quiet_NaN();
  row.stace_error_ratio = std::numeric_limits<double>::quiet_NaN();
  return row;
}

std::vector<RatioRow> mc_ratio_table(const MarketParams& market, const AveragingGrid& grid,
                                     const OptionSpec& spec, const McConfig& config,
                                     std::span<const double> alphas) {
  detail::require(!alphas.empty(), "mc_ratio_table needs at least one alpha");
  validate(config);
  const double forward = arithmetic_asian_moments(market, grid).m1;

  std::vector<RatioRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    RatioRow row = closed_form_ratio_row(market, grid, alpha);
    const VolumeParams volume{alpha, config.volume_theta, grid.n_buckets};
    const McJointResult mc = mc_simulate(market, volume, grid, spec, config);
    row.r_mc = mc.moment_ratio;
    row.r_mc_std_error = mc.moment_ratio_std_error;
    try {
      row.r_mc_price = implied_vol_from_price(mc.vwap.price, forward, spec, market.r) /
                       implied_vol_from_price(mc.asian.price, forward, spec, market.r);
    } catch (const numerical_error&) {
      row.r_mc_price = std::numeric_limits<double>::quiet_NaN();
    }
    const double denominator = row.r_mc - 1.0;
    if (!std::isinf(alpha) && denominator != 0.0) {
      row.stace_error_ratio = (row.r_stace - 1.0) / denominator;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vwapgamma
