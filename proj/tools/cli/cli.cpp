#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "report.hpp"
#include "vwapgamma/error.hpp"
#include "vwapgamma/mc_engine.hpp"
#include "vwapgamma/pricer.hpp"
#include "vwapgamma/volume_analytics.hpp"
#include "vwapgamma/volume_series.hpp"
#include "vwapgamma/vwap_moments.hpp"

namespace vwapgamma::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Table reproduction inputs: sigma = 0.2, r = 0.05, S = K = 100.
constexpr double kTableSigma = 0.2;
constexpr double kTableRate = 0.05;
constexpr double kTableSpot = 100.0;
constexpr double kTable2Theta = 0.00067;
constexpr int kTable2Buckets = 10;
constexpr double kTable2InverseAlphas[] = {0.0, 0.02, 0.2, 0.5, 0.75, 1.0, 1.2, 1.5, 1.8, 2.0};

struct Table3Row {
  OptionKind kind;
  double alpha;
  int n;  // T = n / 252
};
constexpr Table3Row kTable3Rows[] = {
    {OptionKind::put, 10, 80}, {OptionKind::call, 10, 80}, {OptionKind::put, 10, 20},
    {OptionKind::call, 10, 20}, {OptionKind::put, 10, 5}, {OptionKind::call, 10, 5},
    {OptionKind::put, 5, 5},
};

Number num(double v, int decimals) { return {v, decimals}; }
Number pct(double v) { return {100.0 * v, 4}; }

struct CommonArgs {
  std::string format = "table";
  std::string output;
  std::string config;
};

struct MarketArgs {
  double s0 = kTableSpot;
  double r = kTableRate;
  double sigma = kTableSigma;
  std::optional<double> strike;
  std::string kind = "call";
};

struct PriceArgs {
  MarketArgs market;
  double t = 0.0;
  int n = 0;
  std::optional<double> alpha;
  std::optional<double> alpha_tilde;
  double theta = 1.0;
};

struct McArgs {
  MarketArgs market;
  double t = 2.0 / 52.0;
  int n = kTable2Buckets;
  double alpha = 0.0;
  double theta = kTable2Theta;
  double paths = 1e6;
  std::uint64_t seed = McConfig{}.seed;
  std::int64_t block_size = McConfig{}.block_size;
  unsigned workers = 0;
};

struct ReproduceArgs {
  std::string table;
  bool mc = false;
  double paths = 1e6;
  std::uint64_t seed = McConfig{}.seed;
  std::int64_t block_size = McConfig{}.block_size;
  unsigned workers = 0;
};

struct FitArgs {
  std::string input;
  std::string levels = "5,10,20,40";
  int n_boot = 1000;
  std::uint64_t seed = 1;
  int lag = 1;
  int bars_per_day = 0;
  unsigned workers = 0;
};

struct SynthArgs {
  double alpha = 1.0;
  double theta = 0.2e6;
  int n_points = 5130;
  int bars_per_day = 38;
  std::uint64_t seed = 1;
};

struct IntradayArgs {
  std::string input;
  int bars_per_day = 0;
};

void add_common(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("--output", common.output, "Write the report to this file");
  sub->add_option("--config", common.config, "Flat key=value file supplying option defaults");
}

void add_market(CLI::App* sub, MarketArgs& m) {
  sub->add_option("--s0", m.s0, "Spot price");
  sub->add_option("--r", m.r, "Continuously compounded rate");
  sub->add_option("--sigma", m.sigma, "Black-Scholes volatility");
  sub->add_option("--k", m.strike, "Strike (default: s0)");
  sub->add_option("--kind", m.kind, "call or put")->check(CLI::IsMember({"call", "put"}));
}

OptionKind parse_kind(const std::string& kind) {
  return kind == "put" ? OptionKind::put : OptionKind::call;
}

std::int64_t path_count(double paths) {
  detail::require(paths >= 1.0 && paths <= 9e15 && std::floor(paths) == paths,
                  "--paths must be a positive integer, got " + fmt::format("{}", paths));
  return static_cast<std::int64_t>(paths);
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int level = std::stoi(item, &used);
      detail::require(used == item.size() && level >= 1, "");
      levels.push_back(level);
    } catch (const std::logic_error&) {
      throw parameter_error("--levels expects positive integers separated by commas, got '" +
                            text + "'");
    }
  }
  detail::require(!levels.empty(), "--levels must not be empty");
  return levels;
}

// --- commands -------------------------------------------------------------

Report cmd_price(const PriceArgs& a) {
  const MarketParams market{a.market.s0, a.market.r, a.market.sigma};
  validate(market);
  const OptionSpec spec{a.market.strike.value_or(a.market.s0), a.t, parse_kind(a.market.kind)};
  validate(spec);

  MomentPair asian, exact, stace;
  Report report;
  report.command = "price";
  std::vector<Cell> head{std::string(to_string(spec.kind)), num(spec.maturity, 6)};
  if (a.alpha_tilde) {
    const ContinuousVolumeParams volume{*a.alpha_tilde, a.theta};
    asian = arithmetic_asian_moments_continuous(market, spec.maturity);
    exact = vwap_moments_continuous(market, volume, spec.maturity, MomentVariant::exact);
    stace = vwap_moments_continuous(market, volume, spec.maturity, MomentVariant::stace);
    report.meta.emplace_back("averaging", "continuous");
    report.columns = {"kind", "t", "alpha_tilde"};
    head.push_back(num(*a.alpha_tilde, 6));
  } else {
    detail::require(a.n >= 1, "--n (number of averaging points) is required");
    const AveragingGrid grid{spec.maturity, a.n};
    const VolumeParams volume{*a.alpha, a.theta, a.n};
    asian = arithmetic_asian_moments(market, grid);
    exact = vwap_moments_discrete_exact(market, volume, grid);
    stace = vwap_moments_discrete_stace(market, volume, grid);
    report.meta.emplace_back("averaging", "discrete");
    report.columns = {"kind", "t", "n", "alpha"};
    head.push_back(std::int64_t{a.n});
    head.push_back(num(*a.alpha, 6));
  }

  const BlackInputs b_asian = match_moments_to_black(asian, spec.maturity);
  const BlackInputs b_exact = match_moments_to_black(exact, spec.maturity);
  const BlackInputs b_stace = match_moments_to_black(stace, spec.maturity);
  const double p_asian = black_price(b_asian.forward, b_asian.effective_vol, spec, market.r);
  const double p_exact = black_price(b_exact.forward, b_exact.effective_vol, spec, market.r);
  const double p_stace = black_price(b_stace.forward, b_stace.effective_vol, spec, market.r);
  const double gap = p_asian > 0.0 ? p_exact / p_asian - 1.0 : kNan;

  for (const char* c : {"strike", "forward", "m2_asian", "m2_exact", "m2_stace", "sigma_aa_pct",
                        "sigma_vwap_pct", "sigma_vwap_stace_pct", "price_aa", "price_vwap",
                        "price_vwap_stace", "gap_pct"}) {
    report.columns.emplace_back(c);
  }
  head.insert(head.end(), {num(spec.strike, 4), num(b_asian.forward, 6), num(asian.m2, 6),
                           num(exact.m2, 6), num(stace.m2, 6), pct(b_asian.effective_vol),
                           pct(b_exact.effective_vol), pct(b_stace.effective_vol), num(p_asian, 4),
                           num(p_exact, 4), num(p_stace, 4), pct(gap)});
  report.add_row(std::move(head));
  return report;
}

double implied_or_nan(double price, double forward, const OptionSpec& spec, double rate) {
  try {
    return implied_vol_from_price(price, forward, spec, rate);
  } catch (const numerical_error&) {
    return kNan;
  }
}

Report cmd_mc(const McArgs& a) {
  const MarketParams market{a.market.s0, a.market.r, a.market.sigma};
  validate(market);
  const OptionSpec spec{a.market.strike.value_or(a.market.s0), a.t, parse_kind(a.market.kind)};
  validate(spec);
  const AveragingGrid grid{a.t, a.n};
  const VolumeParams volume{a.alpha, a.theta, a.n};
  McConfig config;
  config.n_paths = path_count(a.paths);
  config.seed = a.seed;
  config.block_size = a.block_size;
  config.workers = a.workers;
  config.volume_theta = a.theta;

  const McJointResult mc = mc_simulate(market, volume, grid, spec, config);
  const RatioRow closed = closed_form_ratio_row(market, grid, a.alpha);
  const double forward = arithmetic_asian_moments(market, grid).m1;
  const double iv_vwap = implied_or_nan(mc.vwap.price, forward, spec, market.r);
  const double iv_asian = implied_or_nan(mc.asian.price, forward, spec, market.r);
  const double sigma_vwap = match_moments_to_black(mc.vwap_moments, spec.maturity).effective_vol;
  const double sigma_asian = match_moments_to_black(mc.asian_moments, spec.maturity).effective_vol;
  const double stace_error =
      mc.moment_ratio != 1.0 ? (closed.r_stace - 1.0) / (mc.moment_ratio - 1.0) : kNan;

  Report report;
  report.command = "mc";
  report.meta.emplace_back("seed", std::to_string(config.seed));
  report.meta.emplace_back("block_size", std::to_string(config.block_size));
  report.columns = {"alpha",        "paths",         "price_vwap",     "se_vwap",
                    "price_aa",     "se_aa",         "sigma_mc_vwap_pct", "sigma_mc_aa_pct",
                    "iv_vwap_pct",  "iv_aa_pct",     "r_mc",           "r_mc_se",
                    "r_mc_price",   "r_exact",       "r_stace",        "stace_error_ratio",
                    "clamped_volumes"};
  report.add_row({num(a.alpha, 6), std::int64_t{config.n_paths}, num(mc.vwap.price, 6),
                  num(mc.vwap.std_error, 6), num(mc.asian.price, 6), num(mc.asian.std_error, 6),
                  pct(sigma_vwap), pct(sigma_asian), pct(iv_vwap), pct(iv_asian),
                  num(mc.moment_ratio, 6), num(mc.moment_ratio_std_error, 6),
                  num(iv_vwap / iv_asian, 6), num(closed.r_exact, 6), num(closed.r_stace, 6),
                  num(stace_error, 4), std::int64_t{mc.clamped_volumes}});
  return report;
}

Report reproduce_table2(const ReproduceArgs& a) {
  const MarketParams market{kTableSpot, kTableRate, kTableSigma};
  const AveragingGrid grid{2.0 / 52.0, kTable2Buckets};
  const OptionSpec spec{kTableSpot, grid.maturity, OptionKind::call};
  std::vector<double> alphas;
  for (double inv : kTable2InverseAlphas) {
    alphas.push_back(inv == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv);
  }

  Report report;
  report.command = "reproduce table2";
  report.columns = {"inv_alpha", "r_exact", "r_stace", "r_exact_asymptotic", "r_stace_asymptotic"};
  std::vector<RatioRow> rows;
  if (a.mc) {
    McConfig config;
    config.n_paths = path_count(a.paths);
    config.seed = a.seed;
    config.block_size = a.block_size;
    config.workers = a.workers;
    config.volume_theta = kTable2Theta;
    rows = mc_ratio_table(market, grid, spec, config, alphas);
    for (const char* c : {"r_mc", "r_mc_se", "r_mc_price", "stace_error_ratio"}) {
      report.columns.emplace_back(c);
    }
    report.meta.emplace_back("paths", std::to_string(config.n_paths));
    report.meta.emplace_back("seed", std::to_string(config.seed));
  } else {
    for (double alpha : alphas) rows.push_back(closed_form_ratio_row(market, grid, alpha));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RatioRow& row = rows[i];
    std::vector<Cell> cells{num(kTable2InverseAlphas[i], 2), num(row.r_exact, 4), num(row.r_stace, 4),
                            num(row.r_exact_asymptotic, 4), num(row.r_stace_asymptotic, 4)};
    if (a.mc) {
      cells.insert(cells.end(), {num(row.r_mc, 4), num(row.r_mc_std_error, 4),
                                 num(row.r_mc_price, 4), num(row.stace_error_ratio, 2)});
    }
    report.add_row(std::move(cells));
  }
  return report;
}

Report reproduce_table3() {
  const MarketParams market{kTableSpot, kTableRate, kTableSigma};
  Report report;
  report.command = "reproduce table3";
  report.meta.emplace_back("maturity", "t = n / 252");
  report.columns = {"kind",     "t",          "alpha",    "n",      "sigma_aa_pct",
                    "sigma_vwap_pct", "price_aa", "price_vwap", "gap_pct"};
  for (const Table3Row& row : kTable3Rows) {
    const double t = row.n / 252.0;
    const AveragingGrid grid{t, row.n};
    const VolumeParams volume{row.alpha, 1.0, row.n};
    const OptionSpec spec{kTableSpot, t, row.kind};
    const PriceQuote aa = price_vwap(market, volume, grid, spec, PricingVariant::asian);
    const PriceQuote vw = price_vwap(market, volume, grid, spec, PricingVariant::exact);
    report.add_row({std::string(to_string(row.kind)), num(t, 3), num(row.alpha, 1),
                    std::int64_t{row.n}, num(100.0 * aa.implied_vol, 2),
                    num(100.0 * vw.implied_vol, 2), num(aa.price, 3), num(vw.price, 3),
                    num(100.0 * (vw.price / aa.price - 1.0), 2)});
  }
  return report;
}

Report cmd_fit(const FitArgs& a) {
  const std::vector<int> levels = parse_levels(a.levels);
  const VolumeSeries series = read_volume_csv_file(a.input, a.bars_per_day);
  const std::vector<GofReport> table =
      build_gof_table(series, levels, a.n_boot, a.seed, a.lag, a.workers);
  Report report;
  report.command = "fit";
  report.meta.emplace_back("estimator", "mle");
  report.meta.emplace_back("p_values", "parametric bootstrap, n_boot = " + std::to_string(a.n_boot));
  report.meta.emplace_back("bars", std::to_string(series.bars.size()));
  report.meta.emplace_back("bars_per_day", std::to_string(series.bars_per_day));
  report.columns = {"level", "theta_hat", "alpha_hat", "alpha_per_l", "autocorr",
                    "p_ad", "p_ks", "n_points"};
  for (const GofReport& row : table) {
    report.add_row({std::int64_t{row.level}, num(row.theta_hat, 2), num(row.alpha_hat, 4),
                    num(row.alpha_per_l, 4), num(row.autocorr, 4), num(row.p_ad, 4),
                    num(row.p_ks, 4), std::int64_t{row.n_points}});
  }
  return report;
}

Report cmd_intraday(const IntradayArgs& a) {
  const VolumeSeries series = read_volume_csv_file(a.input, a.bars_per_day);
  Report report;
  report.command = "intraday";
  report.columns = {"bucket_index", "correlation", "n_days"};
  for (const BucketCorrelation& b : intraday_cum_incr_correlation(series)) {
    report.add_row({std::int64_t{b.bucket_index}, num(b.correlation, 6), std::int64_t{b.n_days}});
  }
  return report;
}

// --- plumbing -------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads key=value lines into "--key=value" arguments.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw data_error(fmt::format("{}:{}: expected key=value", path, line_no));
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty() || key == "config") {
      throw data_error(fmt::format("{}:{}: invalid key '{}'", path, line_no, key));
    }
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

// Splices config-file options in front of the explicit ones, so that the
// command line wins (options keep their last value).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.empty()) return args;
  std::vector<std::string> expanded{args[0]};
  const std::vector<std::string> from_file = read_config(*path);
  expanded.insert(expanded.end(), from_file.begin(), from_file.end());
  expanded.insert(expanded.end(), args.begin() + 1, args.end());
  return expanded;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  return OutputFormat::table;
}

void emit(const Report& report, const CommonArgs& common, std::ostream& out) {
  const OutputFormat format = parse_format(common.format);
  if (common.output.empty()) {
    render(out, report, format);
    return;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file) throw data_error("cannot write '" + common.output + "'");
  render(file, report, format);
  if (!file.flush()) throw data_error("write to '" + common.output + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"VWAP option pricing under gamma-distributed volume", "vwapgamma"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CommonArgs common;
  PriceArgs price;
  McArgs mc;
  ReproduceArgs reproduce;
  FitArgs fit;
  SynthArgs synth;
  IntradayArgs intraday;
  std::string synth_output;

  CLI::App* price_cmd = app.add_subcommand("price", "Moment-matched VWAP and Asian quotes");
  add_common(price_cmd, common);
  add_market(price_cmd, price.market);
  price_cmd->add_option("--t", price.t, "Maturity in years")->required();
  price_cmd->add_option("--n", price.n, "Number of averaging points");
  auto* alpha_opt = price_cmd->add_option("--alpha", price.alpha, "Gamma shape per bucket");
  auto* tilde_opt = price_cmd->add_option("--alpha-tilde", price.alpha_tilde,
                                          "Gamma-process shape per year (continuous averaging)");
  alpha_opt->excludes(tilde_opt);
  price_cmd->add_option("--theta", price.theta, "Gamma scale");

  CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo VWAP and Asian prices and ratios");
  add_common(mc_cmd, common);
  add_market(mc_cmd, mc.market);
  mc_cmd->add_option("--t", mc.t, "Maturity in years");
  mc_cmd->add_option("--n", mc.n, "Number of averaging points");
  mc_cmd->add_option("--alpha", mc.alpha, "Gamma shape per bucket")->required();
  mc_cmd->add_option("--theta", mc.theta, "Gamma scale");
  mc_cmd->add_option("--paths", mc.paths, "Number of paths (1e6 notation accepted)");
  mc_cmd->add_option("--seed", mc.seed, "Random seed");
  mc_cmd->add_option("--block-size", mc.block_size, "Paths per random stream block");
  mc_cmd->add_option("--workers", mc.workers, "Worker threads (0 = all cores)");

  CLI::App* repro_cmd = app.add_subcommand("reproduce", "Regenerate the reference tables");
  add_common(repro_cmd, common);
  repro_cmd->add_option("table", reproduce.table, "table2 or table3")
      ->required()
      ->check(CLI::IsMember({"table2", "table3"}));
  repro_cmd->add_flag("--mc", reproduce.mc, "Add Monte Carlo columns to table2");
  repro_cmd->add_option("--paths", reproduce.paths, "Monte Carlo paths per row");
  repro_cmd->add_option("--seed", reproduce.seed, "Random seed");
  repro_cmd->add_option("--block-size", reproduce.block_size, "Paths per random stream block");
  repro_cmd->add_option("--workers", reproduce.workers, "Worker threads (0 = all cores)");

  CLI::App* fit_cmd = app.add_subcommand("fit", "Gamma fits and goodness-of-fit table");
  add_common(fit_cmd, common);
  fit_cmd->add_option("--input", fit.input, "Volume CSV")->required();
  fit_cmd->add_option("--levels", fit.levels, "Amalgamation levels, comma separated");
  fit_cmd->add_option("--n-boot", fit.n_boot, "Bootstrap replications (>= 100)");
  fit_cmd->add_option("--seed", fit.seed, "Bootstrap seed");
  fit_cmd->add_option("--lag", fit.lag, "Autocorrelation lag");
  fit_cmd->add_option("--bars-per-day", fit.bars_per_day, "Bars per day (0 = infer)");
  fit_cmd->add_option("--workers", fit.workers, "Worker threads (0 = all cores)");

  CLI::App* synth_cmd = app.add_subcommand("synth", "Write a synthetic gamma volume CSV");
  synth_cmd->add_option("--alpha", synth.alpha, "Gamma shape per bar");
  synth_cmd->add_option("--theta", synth.theta, "Gamma scale");
  synth_cmd->add_option("--n-points", synth.n_points, "Number of bars");
  synth_cmd->add_option("--bars-per-day", synth.bars_per_day, "Bars per trading day");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--output", synth_output, "CSV path (default: stdout)");
  synth_cmd->add_option("--config", common.config, "Flat key=value file supplying option defaults");

  CLI::App* intraday_cmd =
      app.add_subcommand("intraday", "Cumulative vs incremental volume correlation by bucket");
  add_common(intraday_cmd, common);
  intraday_cmd->add_option("--input", intraday.input, "Volume CSV")->required();
  intraday_cmd->add_option("--bars-per-day", intraday.bars_per_day, "Bars per day (0 = infer)");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);

    if (*price_cmd) {
      detail::require(price.alpha || price.alpha_tilde, "one of --alpha or --alpha-tilde is required");
      emit(cmd_price(price), common, out);
    } else if (*mc_cmd) {
      emit(cmd_mc(mc), common, out);
    } else if (*repro_cmd) {
      emit(reproduce.table == "table2" ? reproduce_table2(reproduce) : reproduce_table3(), common,
           out);
    } else if (*fit_cmd) {
      emit(cmd_fit(fit), common, out);
    } else if (*synth_cmd) {
      const VolumeSeries series =
          make_synthetic_series(synth.alpha, synth.theta, synth.n_points, synth.bars_per_day,
                                synth.seed);
      if (synth_output.empty()) {
        write_volume_csv(out, series);
      } else {
        std::ofstream file(synth_output, std::ios::binary);
        if (!file) throw data_error("cannot write '" + synth_output + "'");
        write_volume_csv(file, series);
        if (!file.flush()) throw data_error("write to '" + synth_output + "' failed");
      }
    } else if (*intraday_cmd) {
      emit(cmd_intraday(intraday), common, out);
    }
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const data_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const numerical_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace vwapgamma::cli
