#include "vwapgamma/pricer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vwapgamma/error.hpp"
#include "vwapgamma/special_functions.hpp"

namespace vwapgamma {
namespace {

constexpr double kVolLower = 1e-6;
constexpr double kVolUpper = 5.0;

double undiscounted_black(double forward, double vol, const OptionSpec& spec) {
  const double strike = spec.strike;
  const double total_vol = vol * std::sqrt(spec.maturity);
  if (total_vol == 0.0) {
    return spec.kind == OptionKind::call ? std::max(forward - strike, 0.0)
                                         : std::max(strike - forward, 0.0);
  }
  const double d1 = std::log(forward / strike) / total_vol + 0.5 * total_vol;
  const double d2 = d1 - total_vol;
  if (spec.kind == OptionKind::call) {
    return forward * normal_cdf(d1) - strike * normal_cdf(d2);
  }
  return strike * normal_cdf(-d2) - forward * normal_cdf(-d1);
}

}  // namespace

std::string_view to_string(OptionKind kind) noexcept {
  return kind == OptionKind::call ? "call" : "put";
}

std::string_view to_string(PricingVariant variant) noexcept {
  switch (variant) {
    case PricingVariant::exact: return "exact";
    case PricingVariant::stace: return "stace";
    case PricingVariant::asian: return "asian";
  }
  return "unknown";
}

void validate(const OptionSpec& spec) {
  detail::require(spec.strike > 0.0 && std::isfinite(spec.strike),
                  "strike must be positive, got " + std::to_string(spec.strike));
  detail::require(spec.maturity > 0.0 && std::isfinite(spec.maturity),
                  "maturity must be positive, got " + std::to_string(spec.maturity));
}

double black_price(double forward, double vol, const OptionSpec& spec, double rate) {
  validate(spec);
  detail::require(forward > 0.0, "forward must be positive");
  detail::require(vol >= 0.0 && std::isfinite(vol), "volatility must be non-negative");
  return std::exp(-rate * spec.maturity) * undiscounted_black(forward, vol, spec);
}

double black_vega(double forward, double vol, const OptionSpec& spec, double rate) {
  validate(spec);
  detail::require(forward > 0.0, "forward must be positive");
  const double sqrt_t = std::sqrt(spec.maturity);
  const double total_vol = vol * sqrt_t;
  if (total_vol == 0.0) return 0.0;
  const double d1 = std::log(forward / spec.strike) / total_vol + 0.5 * total_vol;
  return std::exp(-rate * spec.maturity) * forward * normal_pdf(d1) * sqrt_t;
}

BlackInputs match_moments_to_black(const MomentPair& moments, double maturity) {
  detail::require(moments.m1 > 0.0, "first moment must be positive");
  detail::require(moments.m2 >= 0.0, "second central moment must be non-negative");
  detail::require(maturity > 0.0, "maturity must be positive");
  const double ratio = moments.m2 / (moments.m1 * moments.m1);
  return {moments.m1, std::sqrt(std::log1p(ratio) / maturity)};
}

PriceQuote price_vwap(const MarketParams& market, const VolumeParams& volume,
                      const AveragingGrid& grid, const OptionSpec& spec, PricingVariant variant) {
  validate(spec);
  validate(grid);
  detail::require(std::fabs(grid.maturity - spec.maturity) <= 1e-12 * spec.maturity,
                  "averaging grid maturity does not match the option maturity");
  MomentPair moments;
  switch (variant) {
    case PricingVariant::exact:
      moments = vwap_moments_discrete_exact(market, volume, grid);
      break;
    case PricingVariant::stace:
      moments = vwap_moments_discrete_stace(market, volume, grid);
      break;
    case PricingVariant::asian:
      moments = arithmetic_asian_moments(market, grid);
      break;
  }
  const BlackInputs inputs = match_moments_to_black(moments, spec.maturity);
  return {black_price(inputs.forward, inputs.effective_vol, spec, market.r),
          inputs.effective_vol, inputs.forward};
}

double implied_vol_from_price(double price, double forward, const OptionSpec& spec, double rate) {
  validate(spec);
  detail::require(forward > 0.0, "forward must be positive");
  detail::require(std::isfinite(price), "price must be finite");

  // Invert on the out-of-the-money side: parity moves the intrinsic part out
  // so that deep in-the-money quotes keep their time value.
  const double discount = std::exp(-rate * spec.maturity);
  OptionSpec otm = spec;
  double target = price;
  const bool call_itm = spec.kind == OptionKind::call && forward > spec.strike;
  const bool put_itm = spec.kind == OptionKind::put && forward < spec.strike;
  if (call_itm) {
    otm.kind = OptionKind::put;
    target = price - discount * (forward - spec.strike);
  } else if (put_itm) {
    otm.kind = OptionKind::call;
    target = price - discount * (spec.strike - forward);
  }

  double lo = kVolLower;
  double hi = kVolUpper;
  const double price_lo = black_price(forward, lo, otm, rate);
  const double price_hi = black_price(forward, hi, otm, rate);
  if (!(target >= price_lo && target <= price_hi)) {
    throw numerical_error("implied_vol_from_price: price " + std::to_string(price) +
                          " has no Black volatility in [1e-6, 5]");
  }
  if (target == price_lo) return lo;
  if (target == price_hi) return hi;

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = black_price(forward, mid, otm, rate);
    if (value == target) return mid;
    if (value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace vwapgamma
