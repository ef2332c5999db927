// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vwapgamma/error.hpp"
#include "vwapgamma/mc_engine.hpp"
#include "vwapgamma/pricer.hpp"
#include "vwapgamma/volume_analytics.hpp"
#include "vwapgamma/volume_model.hpp"
#include "vwapgamma/volume_series.hpp"
#include "vwapgamma/vwap_moments.hpp"

using namespace vwapgamma;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const MarketParams kTable2Market{100.0, 0.05, 0.2};
const AveragingGrid kTable2Grid{2.0 / 52.0, 10};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double alpha_of(double inv_alpha) { return inv_alpha == 0.0 ? kInf : 1.0 / inv_alpha; }

double ratio(const MomentPair& v, const MomentPair& a, double t) {
  return match_moments_to_black(v, t).effective_vol / match_moments_to_black(a, t).effective_vol;
}

// 1. Table 2 closed-form columns.
void table2_closed_form(Outcome& o) {
  struct Row {
    double inv_alpha, r_exact, r_stace;
    bool check_stace;
  };
  const Row rows[] = {
      {0.00, 1.0000, 1.0000, true}, {0.02, 1.0004, 1.0014, true}, {0.20, 1.0042, 1.0142, true},
      {0.50, 1.0102, 1.0351, true}, {0.75, 1.0148, 1.0351, false}, {1.00, 1.0193, 1.0522, false},
      {1.20, 1.0227, 1.0823, true}, {1.50, 1.0276, 1.1019, true}, {1.80, 1.0322, 1.1212, true},
      {2.00, 1.0351, 1.1339, true},
  };
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const Row& row : rows) {
    const RatioRow r = closed_form_ratio_row(kTable2Market, kTable2Grid, alpha_of(row.inv_alpha));
    const double e = std::fabs(r.r_exact - row.r_exact);
    worst = std::max(worst, e);
    o.check(e <= 1e-4 + 1e-12, "r_exact at 1/alpha=" + std::to_string(row.inv_alpha));
    if (row.check_stace) {
      const double s = std::fabs(r.r_stace - row.r_stace);
      worst = std::max(worst, s);
      o.check(s <= 1e-4 + 1e-12, "r_stace at 1/alpha=" + std::to_string(row.inv_alpha));
    }
  }
  const double elapsed = seconds_since(start);
  o.check(elapsed < 1.0, "runtime");
  o.detail << (o.pass ? "" : "; ") << "max deviation " << worst << ", " << elapsed << " s";
}

// 2. Table 2 Monte Carlo column at one million paths.
void table2_monte_carlo(Outcome& o) {
  const double inv_alphas[] = {0.0, 0.02, 0.2, 0.5, 0.75, 1.0, 1.2, 1.5, 1.8, 2.0};
  std::vector<double> alphas;
  for (double inv : inv_alphas) alphas.push_back(alpha_of(inv));
  McConfig config;
  config.n_paths = 1'000'000;
  config.volume_theta = 0.00067;
  const OptionSpec spec{100.0, kTable2Grid.maturity, OptionKind::call};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<RatioRow> rows =
      mc_ratio_table(kTable2Market, kTable2Grid, spec, config, alphas);
  double worst_z = 0.0;
  for (const RatioRow& row : rows) {
    const double diff = std::fabs(row.r_mc - row.r_exact);
    if (row.r_mc_std_error > 0.0) worst_z = std::max(worst_z, diff / row.r_mc_std_error);
    o.check(diff <= 3.0 * row.r_mc_std_error + 1e-12,
            "r_mc off by more than 3 SE at 1/alpha=" + std::to_string(row.inv_alpha));
  }
  o.check(std::fabs(rows.back().r_mc - 1.0352) <= 0.003, "r_mc at 1/alpha=2");
  o.detail << (o.pass ? "" : "; ") << "r_mc(1/alpha=2)=" << rows.back().r_mc
           << ", worst |z|=" << worst_z << ", " << seconds_since(start) << " s";
}

// 3. Table 3 prices and effective volatilities.
void table3(Outcome& o) {
  struct Row {
    OptionKind kind;
    double alpha;
    int n;
    double vol_aa, vol_vwap, p_aa, p_vwap;
  };
  const Row rows[] = {
      {OptionKind::put, 10, 80, 11.68, 11.69, 2.217, 2.217},
      {OptionKind::call, 10, 80, 11.68, 11.69, 3.012, 3.012},
      {OptionKind::put, 10, 20, 11.99, 12.00, 1.242, 1.242},
      {OptionKind::call, 10, 20, 11.99, 12.00, 1.450, 1.450},
      {OptionKind::put, 10, 5, 13.27, 13.32, 0.716, 0.718},
      {OptionKind::call, 10, 5, 13.27, 13.32, 0.775, 0.778},
      {OptionKind::put, 5, 5, 13.27, 13.36, 0.716, 0.721},
  };
  const auto start = std::chrono::steady_clock::now();
  const MarketParams market{100.0, 0.05, 0.2};
  double gap = 0.0;
  int i = 0;
  for (const Row& row : rows) {
    ++i;
    const double t = row.n / 252.0;
    const OptionSpec spec{100.0, t, row.kind};
    const AveragingGrid grid{t, row.n};
    const VolumeParams volume{row.alpha, 1.0, row.n};
    const PriceQuote aa = price_vwap(market, volume, grid, spec, PricingVariant::asian);
    const PriceQuote vw = price_vwap(market, volume, grid, spec, PricingVariant::exact);
    const std::string tag = " row " + std::to_string(i);
    o.check(std::fabs(100.0 * aa.implied_vol - row.vol_aa) <= 0.01 + 1e-9, "sigma_aa" + tag);
    o.check(std::fabs(100.0 * vw.implied_vol - row.vol_vwap) <= 0.01 + 1e-9, "sigma_vwap" + tag);
    o.check(std::fabs(aa.price - row.p_aa) <= 0.002 + 1e-9, "price_aa" + tag);
    o.check(std::fabs(vw.price - row.p_vwap) <= 0.002 + 1e-9, "price_vwap" + tag);
    gap = 100.0 * (vw.price / aa.price - 1.0);
  }
  o.check(std::fabs(gap - 0.73) <= 0.05, "last row gap");
  const double elapsed = seconds_since(start);
  o.check(elapsed < 1.0, "runtime");
  o.detail << (o.pass ? "" : "; ") << "last gap " << gap << "%, " << elapsed << " s";
}

// 4. Synthetic gamma series through the amalgamation and fitting pipeline.
void synthetic_gof_table(Outcome& o) {
  const double theta = 0.2e6;
  const auto start = std::chrono::steady_clock::now();
  const VolumeSeries series = make_synthetic_series(1.0, theta, 5130, 38, 1);
  const int levels[] = {5, 10, 20, 40};
  const std::vector<GofReport> table = build_gof_table(series, levels, 1000, 1);
  int white = 0, accepted = 0;
  for (const GofReport& row : table) {
    const std::string tag = " at L=" + std::to_string(row.level);
    o.check(std::fabs(row.theta_hat / theta - 1.0) <= 0.15, "theta_hat" + tag);
    o.check(std::fabs(row.alpha_per_l - 1.0) <= 0.15, "alpha_hat/L" + tag);
    white += std::fabs(row.autocorr) < 2.0 / std::sqrt(double(row.n_points));
    accepted += row.p_ad > 0.05 && row.p_ks > 0.05;
    o.detail << "L=" << row.level << " theta/theta0=" << row.theta_hat / theta
             << " alpha/L=" << row.alpha_per_l << " C=" << row.autocorr << " p=(" << row.p_ad
             << "," << row.p_ks << ") ";
  }
  o.check(white >= 3, "autocorrelation band");
  o.check(accepted >= 3, "bootstrap p-values");
  o.detail << "| " << seconds_since(start) << " s";
}

// 5. Closed-form moments against a brute-force simulation built on the standard library.
void moment_oracle(Outcome& o) {
  std::mt19937_64 params(20240601);
  std::uniform_real_distribution<double> u01;
  const int n_samples = 1'000'000;
  for (int set = 0; set < 5; ++set) {
    const double sigma = 0.1 + 0.3 * u01(params);
    const double r = 0.1 * u01(params);
    const int n = 5 + static_cast<int>(76 * u01(params));
    const double alpha = std::exp(std::log(0.5) + std::log(100.0) * u01(params));
    const double t = n / 252.0;
    const MarketParams market{100.0, r, sigma};
    const AveragingGrid grid{t, n};
    const MomentPair closed = vwap_moments_discrete_exact(market, {alpha, 1.0, n}, grid);

    std::mt19937_64 gen(set + 1);
    std::normal_distribution<double> z;
    std::gamma_distribution<double> g(alpha, 1.0);
    const double dt = t / n;
    const double drift = (r - 0.5 * sigma * sigma) * dt, vol = sigma * std::sqrt(dt);
    // Welford updates for mean, variance and fourth central moment.
    double mean = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (int k = 1; k <= n_samples; ++k) {
      double log_s = std::log(market.s0), num = 0.0, den = 0.0;
      for (int i = 0; i < n; ++i) {
        log_s += drift + vol * z(gen);
        const double v = g(gen);
        num += std::exp(log_s) * v;
        den += v;
      }
      const double x = num / den;
      const double kd = k, delta = x - mean, dn = delta / kd, dn2 = dn * dn;
      const double term = delta * dn * (kd - 1.0);
      mean += dn;
      m4 += term * dn2 * (kd * kd - 3 * kd + 3) + 6 * dn2 * m2 - 4 * dn * m3;
      m3 += term * dn * (kd - 2) - 3 * dn * m2;
      m2 += term;
    }
    const double var = m2 / (n_samples - 1);
    const double mu4 = m4 / n_samples;
    const double se_mean = std::sqrt(var / n_samples);
    const double se_var = std::sqrt((mu4 - var * var) / n_samples);
    const double z1 = (mean - closed.m1) / se_mean, z2 = (var - closed.m2) / se_var;
    o.detail << "set " << set + 1 << " (sigma=" << sigma << " r=" << r << " N=" << n
             << " alpha=" << alpha << ") z=(" << z1 << "," << z2 << ") ";
    o.check(std::fabs(z1) <= 3.0, "M1 set " + std::to_string(set + 1));
    o.check(std::fabs(z2) <= 3.0, "M2 set " + std::to_string(set + 1));
  }
}

// 6. Structural invariants.
void invariants(Outcome& o) {
  for (double alpha : {0.05, 0.5, 1.0, 7.0, 300.0}) {
    for (int n : {1, 2, 10, 80}) {
      const DirichletMoments d = dirichlet_moments({alpha, 2.5, n});
      const double sum_x = n * d.e_x;
      const double sum_sq = n * d.e_x2 + n * (n - 1.0) * d.e_xixj;
      o.check(std::fabs(sum_x - 1.0) < 1e-12 && std::fabs(sum_sq - 1.0) < 1e-12,
              "Dirichlet identity");
    }
  }

  const MarketParams m{100.0, 0.05, 0.2};
  for (double alpha : {0.5, 2.0, 50.0}) {
    const AveragingGrid grid{0.25, 20};
    const MomentPair asian = arithmetic_asian_moments(m, grid);
    const MomentPair e1 = vwap_moments_discrete_exact(m, {alpha, 1e-3, 20}, grid);
    const MomentPair e2 = vwap_moments_discrete_exact(m, {alpha, 1e5, 20}, grid);
    const MomentPair s1 = vwap_moments_discrete_stace(m, {alpha, 1e-3, 20}, grid);
    o.check(ratio(e1, asian, 0.25) == ratio(e2, asian, 0.25), "theta invariance of closed form");
    o.check(std::fabs(e1.m1 / asian.m1 - 1.0) < 1e-14 && std::fabs(s1.m1 / asian.m1 - 1.0) < 1e-14,
            "forward equality");
    o.check(s1.m2 > e1.m2 && e1.m2 > asian.m2, "M2 ordering");
  }
  {
    McConfig a;
    a.n_paths = 100'000;
    a.volume_theta = 1e-3;
    McConfig b = a;
    b.volume_theta = 1e6;
    const OptionSpec spec{100.0, kTable2Grid.maturity, OptionKind::call};
    const VolumeParams va{1.0, a.volume_theta, 10}, vb{1.0, b.volume_theta, 10};
    const double ra = mc_simulate(kTable2Market, va, kTable2Grid, spec, a).moment_ratio;
    const double rb = mc_simulate(kTable2Market, vb, kTable2Grid, spec, b).moment_ratio;
    o.check(std::fabs(ra - rb) <= 1e-12, "theta invariance of simulation");
  }

  double worst_iv = 0.0;
  for (double k : {80.0, 100.0, 120.0}) {
    for (double vol : {0.05, 0.2, 0.8}) {
      const OptionSpec spec{k, 0.5, OptionKind::put};
      const double p = black_price(100.0, vol, spec, 0.03);
      worst_iv = std::max(worst_iv, std::fabs(implied_vol_from_price(p, 100.0, spec, 0.03) - vol));
    }
  }
  o.check(worst_iv <= 1e-8, "Black round trip");

  {
    const double t = 0.5, alpha = 0.01;
    const int n = 10000;
    const MomentPair cont =
        vwap_moments_continuous(m, {alpha * n / t, 1.0}, t, MomentVariant::exact);
    const MomentPair disc = vwap_moments_discrete_exact(m, {alpha, 1.0, n}, {t, n});
    o.check(std::fabs(disc.m1 / cont.m1 - 1.0) <= 1e-3 && std::fabs(disc.m2 / cont.m2 - 1.0) <= 1e-3,
            "continuous limit at N=1e4");
  }

  {
    const OptionSpec spec{100.0, kTable2Grid.maturity, OptionKind::call};
    McConfig config;
    config.n_paths = 200'000;
    config.block_size = 5'000;
    std::vector<McJointResult> runs;
    for (unsigned w : {1u, 2u, 8u}) {
      config.workers = w;
      runs.push_back(mc_simulate(kTable2Market, {0.5, 0.00067, 10}, kTable2Grid, spec, config));
    }
    bool same = true;
    for (const McJointResult& r : runs) {
      same = same && r.vwap.price == runs[0].vwap.price && r.asian.price == runs[0].asian.price &&
             r.moment_ratio == runs[0].moment_ratio &&
             r.moment_ratio_std_error == runs[0].moment_ratio_std_error;
    }
    o.check(same, "simulation worker determinism");

    std::mt19937_64 gen(3);
    std::gamma_distribution<double> g(2.0, 3.0);
    std::vector<double> x(300);
    for (double& v : x) v = g(gen);
    const GammaFit fit = fit_gamma_mle(x);
    const GofResult p1 = gof_pvalues(x, fit.alpha_hat, fit.theta_hat, 200, 9, 1);
    const GofResult p2 = gof_pvalues(x, fit.alpha_hat, fit.theta_hat, 200, 9, 2);
    const GofResult p8 = gof_pvalues(x, fit.alpha_hat, fit.theta_hat, 200, 9, 8);
    o.check(p1.p_ad == p2.p_ad && p1.p_ad == p8.p_ad && p1.p_ks == p2.p_ks && p1.p_ks == p8.p_ks,
            "bootstrap worker determinism");
  }
  o.detail << (o.pass ? "" : "; ") << "implied vol round trip error " << worst_iv;
}

// 7. Size of the bootstrap tests under the null.
void gof_size(Outcome& o) {
  const int reps = 200, n = 200, n_boot = 200;
  int reject_ad = 0, reject_ks = 0;
  std::mt19937_64 gen(77);
  std::gamma_distribution<double> g(1.5, 4.0);
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<double> x(n);
    for (double& v : x) v = g(gen);
    const GammaFit fit = fit_gamma_mle(x);
    const GofResult r = gof_pvalues(x, fit.alpha_hat, fit.theta_hat, n_boot, 500 + rep);
    reject_ad += r.p_ad < 0.05;
    reject_ks += r.p_ks < 0.05;
  }
  const double rate_ad = reject_ad / double(reps), rate_ks = reject_ks / double(reps);
  o.check(rate_ad >= 0.01 && rate_ad <= 0.09, "A-D rejection rate");
  o.check(rate_ks >= 0.01 && rate_ks <= 0.09, "K-S rejection rate");
  o.detail << (o.pass ? "" : "; ") << "rejection rates A-D " << rate_ad << ", K-S " << rate_ks;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"Table 2 closed form", table2_closed_form},
      {"Table 2 Monte Carlo", table2_monte_carlo},
      {"Table 3 prices", table3},
      {"synthetic volume fit", synthetic_gof_table},
      {"moment oracle", moment_oracle},
      {"invariants", invariants},
      {"goodness-of-fit size", gof_size},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
