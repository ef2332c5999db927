#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vwapgamma {

using Timestamp = std::chrono::sys_seconds;

struct VolumeBar {
  Timestamp timestamp;
  double volume = 0.0;
  std::optional<double> vwap_price;
};

/// Intraday volume bars in time order. Missing bars are simply absent.
struct VolumeSeries {
  std::vector<VolumeBar> bars;
  int bars_per_day = 38;
};

/// Throws data_error unless timestamps strictly increase, volumes are positive
/// and finite, and prices (when present) are positive.
void validate(const VolumeSeries& series);

/// Calendar day (UTC) of a timestamp.
std::chrono::sys_days trading_day(Timestamp t) noexcept;

/// Parses "YYYY-MM-DDTHH:MM[:SS][Z]" (a space may replace the T).
std::optional<Timestamp> parse_timestamp(const std::string& text);
std::string format_timestamp(Timestamp t);

/// CSV with header `timestamp,volume,vwap_price`; vwap_price may be empty.
/// bars_per_day = 0 infers it as the largest number of bars seen in a day.
/// Malformed input throws data_error naming the offending line.
VolumeSeries read_volume_csv(std::istream& in, int bars_per_day = 0);
VolumeSeries read_volume_csv_file(const std::string& path, int bars_per_day = 0);

void write_volume_csv(std::ostream& out, const VolumeSeries& series);

/// `n_points` i.i.d. Gamma(alpha, theta) bars, `bars_per_day` per weekday at
/// 10-minute spacing from 10:00, starting 2013-02-15.
VolumeSeries make_synthetic_series(double alpha, double theta, int n_points, int bars_per_day,
                                   std::uint64_t seed);

}  // namespace vwapgamma
