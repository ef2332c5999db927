#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vwapgamma/pricer.hpp"
#include "vwapgamma/rng.hpp"
#include "vwapgamma/volume_model.hpp"
#include "vwapgamma/vwap_moments.hpp"

namespace vwapgamma {

/// Monte Carlo configuration.
///
/// Paths are grouped in blocks of `block_size`; block b draws from
/// RngStream(seed, b). Results depend on (n_paths, seed, block_size) only,
/// never on `workers` (0 = hardware concurrency).
struct McConfig {
  std::int64_t n_paths = 1'000'000;
  std::uint64_t seed = 20130215;
  std::int64_t block_size = 10'000;
  unsigned workers = 0;
  /// Gamma scale used by mc_ratio_table. Ratios do not depend on it.
  double volume_theta = 0.00067;
};

struct McEstimate {
  double price = 0.0;
  double std_error = 0.0;  // sample std of discounted payoffs / sqrt(n_paths)
  std::int64_t n_paths = 0;
};

struct PathAverages {
  double vwap = 0.0;
  double arith_avg = 0.0;
  int clamped_volumes = 0;  // gamma draws that underflowed to 0 and were clamped
};

enum class AverageKind { vwap, asian };

/// Everything one simulation run produces. VWAP and Asian figures come from
/// the same price and volume draws on every path.
struct McJointResult {
  McEstimate vwap;
  McEstimate asian;
  double payoff_covariance = 0.0;
  MomentPair vwap_moments;   // sample mean and variance of the VWAP
  MomentPair asian_moments;  // sample mean and variance of the plain average
  /// Ratio of moment-matched volatilities sqrt(ln(var/mean^2 + 1)/T),
  /// VWAP over Asian, and its delta-method standard error.
  double moment_ratio = 1.0;
  double moment_ratio_std_error = 0.0;
  std::int64_t clamped_volumes = 0;
};

struct RatioRow {
  double inv_alpha = 0.0;
  double alpha = 0.0;
  double r_exact = 1.0;             // full discrete closed form
  double r_stace = 1.0;             // full discrete ratio-expansion form
  double r_exact_asymptotic = 1.0;  // leading order in T/N
  double r_stace_asymptotic = 1.0;
  double r_mc = 1.0;                // moment-matched MC ratio
  double r_mc_std_error = 0.0;
  double r_mc_price = 1.0;          // ratio of Black vols implied by MC prices
  double stace_error_ratio = 0.0;   // (r_stace - 1) / (r_mc - 1); NaN when undefined
};

void validate(const McConfig& config);

/// One path of S_1..S_N (exact lognormal increments) and V_1..V_N.
/// Draw order per bucket: the normal increment, then the volume.
PathAverages simulate_path(RngStream& stream, const MarketParams& market,
                           const VolumeParams& volume, const AveragingGrid& grid);

McJointResult mc_simulate(const MarketParams& market, const VolumeParams& volume,
                          const AveragingGrid& grid, const OptionSpec& spec,
                          const McConfig& config);

McEstimate mc_price(const MarketParams& market, const VolumeParams& volume,
                    const AveragingGrid& grid, const OptionSpec& spec, const McConfig& config,
                    AverageKind which);

/// One row per alpha (alpha = +infinity gives the degenerate row).
std::vector<RatioRow> mc_ratio_table(const MarketParams& market, const AveragingGrid& grid,
                                     const OptionSpec& spec, const McConfig& config,
                                     std::span<const double> alphas);

/// Closed-form columns only (no simulation).
RatioRow closed_form_ratio_row(const MarketParams& market, const AveragingGrid& grid,
                               double alpha);

}  // namespace vwapgamma
