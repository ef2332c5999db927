#pragma once

#include <string_view>

#include "vwapgamma/volume_model.hpp"
#include "vwapgamma/vwap_moments.hpp"

namespace vwapgamma {

enum class OptionKind { call, put };

struct OptionSpec {
  double strike = 100.0;
  double maturity = 1.0;
  OptionKind kind = OptionKind::call;
};

/// Black inputs obtained by matching (M1, M2) to a lognormal.
struct BlackInputs {
  double forward = 0.0;
  double effective_vol = 0.0;
};

struct PriceQuote {
  double price = 0.0;
  double implied_vol = 0.0;
  double forward = 0.0;
};

/// Which average the quote refers to. `asian` is the alpha -> infinity limit
/// (plain arithmetic average over the same fixings).
enum class PricingVariant { exact, stace, asian };

std::string_view to_string(OptionKind kind) noexcept;
std::string_view to_string(PricingVariant variant) noexcept;

void validate(const OptionSpec& spec);

/// Black-76 value discounted with e^{-rT}. A zero volatility gives the
/// discounted intrinsic value.
double black_price(double forward, double vol, const OptionSpec& spec, double rate);

/// d price / d vol of black_price.
double black_vega(double forward, double vol, const OptionSpec& spec, double rate);

/// forward = m1, effective_vol = sqrt(ln(m2 / m1^2 + 1) / T).
BlackInputs match_moments_to_black(const MomentPair& moments, double maturity);

/// Moment-matched Black quote for a VWAP (or arithmetic-Asian) option.
/// grid.maturity must equal spec.maturity.
PriceQuote price_vwap(const MarketParams& market, const VolumeParams& volume,
                      const AveragingGrid& grid, const OptionSpec& spec, PricingVariant variant);

/// Black volatility reproducing `price`, by bisection on [1e-6, 5].
/// Throws numerical_error when the price lies outside the prices attainable
/// on that bracket.
double implied_vol_from_price(double price, double forward, const OptionSpec& spec, double rate);

}  // namespace vwapgamma
