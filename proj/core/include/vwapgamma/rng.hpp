#pragma once

#include <array>
#include <cstdint>

namespace vwapgamma {

/// Philox4x64-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Pure: the same (counter, key) always maps to the
/// same four 64-bit words.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Counter-based random stream keyed by (seed, stream_id).
///
/// Streams never share state, so a stream can be created on one thread and
/// consumed on another. Two streams with the same (seed, stream_id) replay the
/// same sequence; different stream ids select disjoint Philox keys.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return key_[0]; }
  std::uint64_t stream_id() const noexcept { return key_[1]; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal variate (Marsaglia polar method, pairs cached).
  double standard_normal() noexcept;

  /// Gamma(alpha, 1) variate. Requires alpha > 0 and finite.
  double standard_gamma(double alpha) noexcept;

 private:
  PhiloxKey key_;
  PhiloxCounter counter_{};
  PhiloxCounter buffer_{};
  unsigned buffer_pos_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

double sample_standard_normal(RngStream& stream) noexcept;

/// Gamma(alpha, theta) variate with mean alpha*theta and variance
/// alpha*theta^2. Throws parameter_error unless alpha > 0 and theta > 0.
///
/// Marsaglia-Tsang squeeze for alpha >= 1; for alpha < 1 the Gamma(alpha+1)
/// draw is boosted by U^(1/alpha). May return 0 when alpha is tiny enough for
/// U^(1/alpha) to underflow; callers that divide by volumes clamp.
double sample_gamma(RngStream& stream, double alpha, double theta);

}  // namespace vwapgamma
