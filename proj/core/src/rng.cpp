#include "vwapgamma/rng.hpp"

#include <cmath>
#include <string>

#include "vwapgamma/error.hpp"

namespace vwapgamma {
namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ULL;  // golden ratio
constexpr std::uint64_t kPhiloxW1 = 0xBB67AE8584CAA73BULL;  // sqrt(3) - 1

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) noexcept {
#if defined(__SIZEOF_INT128__)
  __extension__ using u128 = unsigned __int128;
  const u128 product = static_cast<u128>(a) * static_cast<u128>(b);
  hi = static_cast<std::uint64_t>(product >> 64);
  lo = static_cast<std::uint64_t>(product);
#else
  const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFULL, b_hi = b >> 32;
  const std::uint64_t ll = a_lo * b_lo, lh = a_lo * b_hi, hl = a_hi * b_lo, hh = a_hi * b_hi;
  const std::uint64_t mid = (ll >> 32) + (lh & 0xFFFFFFFFULL) + (hl & 0xFFFFFFFFULL);
  hi = hh + (lh >> 32) + (hl >> 32) + (mid >> 32);
  lo = a * b;
#endif
}

inline void philox_round(PhiloxCounter& ctr, const PhiloxKey& key) noexcept {
  std::uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
  mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    philox_round(counter, key);
  }
  return counter;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : key_{seed, stream_id} {}

std::uint64_t RngStream::next_u64() noexcept {
  if (buffer_pos_ == 4) {
    // 256-bit counter increment with carry.
    for (auto& word : counter_) {
      if (++word != 0) break;
    }
    buffer_ = philox4x64_10(counter_, key_);
    buffer_pos_ = 0;
  }
  return buffer_[buffer_pos_++];
}

double RngStream::uniform() noexcept {
  constexpr double kScale = 0x1.0p-53;
  return (static_cast<double>(next_u64() >> 11) + 0.5) * kScale;
}

double RngStream::standard_normal() noexcept {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  has_spare_normal_ = true;
  return u * factor;
}

double RngStream::standard_gamma(double alpha) noexcept {
  if (alpha < 1.0) {
    const double boosted = standard_gamma(alpha + 1.0);
    return boosted * std::pow(uniform(), 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = standard_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_standard_normal(RngStream& stream) noexcept {
  return stream.standard_normal();
}

double sample_gamma(RngStream& stream, double alpha, double theta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw parameter_error("sample_gamma: alpha must be positive and finite, got " +
                          std::to_string(alpha));
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw parameter_error("sample_gamma: theta must be positive and finite, got " +
                          std::to_string(theta));
  }
  return theta * stream.standard_gamma(alpha);
}

}  // namespace vwapgamma
