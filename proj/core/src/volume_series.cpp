#include "vwapgamma/volume_series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string_view>

#include "vwapgamma/error.hpp"
#include "vwapgamma/rng.hpp"

namespace vwapgamma {
namespace {

using namespace std::chrono;

bool parse_int(std::string_view text, int& value) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw data_error("line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

sys_days trading_day(Timestamp t) noexcept { return floor<days>(t); }

std::optional<Timestamp> parse_timestamp(const std::string& raw) {
  std::string_view text = trim(raw);
  if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
  // YYYY-MM-DD?HH:MM[:SS]
  if (text.size() != 16 && text.size() != 19) return std::nullopt;
  if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') || text[13] != ':') {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), mo) ||
      !parse_int(text.substr(8, 2), d) || !parse_int(text.substr(11, 2), h) ||
      !parse_int(text.substr(14, 2), mi)) {
    return std::nullopt;
  }
  if (text.size() == 19) {
    if (text[16] != ':' || !parse_int(text.substr(17, 2), s)) return std::nullopt;
  }
  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!date.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  return sys_days{date} + hours{h} + minutes{mi} + seconds{s};
}

std::string format_timestamp(Timestamp t) {
  const sys_days date = floor<days>(t);
  const year_month_day ymd{date};
  const hh_mm_ss<seconds> tod{t - date};
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buffer;
}

void validate(const VolumeSeries& series) {
  if (series.bars_per_day < 1) throw data_error("bars_per_day must be at least 1");
  for (std::size_t i = 0; i < series.bars.size(); ++i) {
    const VolumeBar& bar = series.bars[i];
    if (!(bar.volume > 0.0) || !std::isfinite(bar.volume)) {
      throw data_error("bar " + std::to_string(i) + ": volume must be positive");
    }
    if (bar.vwap_price && !(*bar.vwap_price > 0.0)) {
      throw data_error("bar " + std::to_string(i) + ": vwap_price must be positive");
    }
    if (i > 0 && !(series.bars[i - 1].timestamp < bar.timestamp)) {
      throw data_error("bar " + std::to_string(i) + ": timestamps must be strictly increasing");
    }
  }
}

VolumeSeries read_volume_csv(std::istream& in, int bars_per_day) {
  VolumeSeries series;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::map<sys_days, int> per_day;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!have_header) {
      if (row != "timestamp,volume,vwap_price" && row != "timestamp,volume") {
        fail(line_no, "expected header 'timestamp,volume,vwap_price'");
      }
      have_header = true;
      continue;
    }
    const std::size_t c1 = row.find(',');
    if (c1 == std::string_view::npos) fail(line_no, "expected at least 2 fields");
    const std::size_t c2 = row.find(',', c1 + 1);
    const std::string_view ts_field = row.substr(0, c1);
    const std::string_view vol_field =
        row.substr(c1 + 1, c2 == std::string_view::npos ? std::string_view::npos : c2 - c1 - 1);
    const std::string_view price_field =
        c2 == std::string_view::npos ? std::string_view{} : trim(row.substr(c2 + 1));
    if (price_field.find(',') != std::string_view::npos) fail(line_no, "too many fields");

    const auto ts = parse_timestamp(std::string(ts_field));
    if (!ts) fail(line_no, "bad timestamp '" + std::string(ts_field) + "'");
    const auto volume = parse_double(vol_field);
    if (!volume) fail(line_no, "bad volume '" + std::string(vol_field) + "'");
    if (!(*volume > 0.0) || !std::isfinite(*volume)) fail(line_no, "volume must be positive");

    VolumeBar bar{*ts, *volume, std::nullopt};
    if (!price_field.empty()) {
      const auto price = parse_double(price_field);
      if (!price) fail(line_no, "bad vwap_price '" + std::string(price_field) + "'");
      if (!(*price > 0.0) || !std::isfinite(*price)) fail(line_no, "vwap_price must be positive");
      bar.vwap_price = *price;
    }
    if (!series.bars.empty() && !(series.bars.back().timestamp < bar.timestamp)) {
      fail(line_no, "timestamps must be strictly increasing");
    }
    ++per_day[trading_day(bar.timestamp)];
    series.bars.push_back(bar);
  }
  if (!have_header) throw data_error("line 1: empty input, expected header");
  if (series.bars.empty()) throw data_error("no volume bars after the header");

  if (bars_per_day > 0) {
    series.bars_per_day = bars_per_day;
  } else {
    int widest = 0;
    for (const auto& [day, count] : per_day) widest = std::max(widest, count);
    series.bars_per_day = widest;
  }
  return series;
}

VolumeSeries read_volume_csv_file(const std::string& path, int bars_per_day) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  return read_volume_csv(in, bars_per_day);
}

void write_volume_csv(std::ostream& out, const VolumeSeries& series) {
  out << "timestamp,volume,vwap_price\n";
  for (const VolumeBar& bar : series.bars) {
    out << format_timestamp(bar.timestamp) << ',' << format_double(bar.volume) << ',';
    if (bar.vwap_price) out << format_double(*bar.vwap_price);
    out << '\n';
  }
}

VolumeSeries make_synthetic_series(double alpha, double theta, int n_points, int bars_per_day,
                                   std::uint64_t seed) {
  detail::require(n_points >= 1, "n_points must be at least 1");
  detail::require(bars_per_day >= 1 && bars_per_day <= 144,
                  "bars_per_day must be between 1 and 144");
  VolumeSeries series;
  series.bars_per_day = bars_per_day;
  series.bars.reserve(static_cast<std::size_t>(n_points));
  RngStream stream(seed, 0);
  sys_days day = sys_days{year{2013} / February / 15};
  int slot = 0;
  for (int i = 0; i < n_points; ++i) {
    if (slot == bars_per_day) {
      slot = 0;
      do {
        day += days{1};
      } while (weekday{day} == Saturday || weekday{day} == Sunday);
    }
    double v = sample_gamma(stream, alpha, theta);
    if (v < std::numeric_limits<double>::min()) v = std::numeric_limits<double>::min();
    series.bars.push_back({day + hours{10} + minutes{10 * slot}, v, std::nullopt});
    ++slot;
  }
  return series;
}

}  // namespace vwapgamma
