#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>

#include "vwapgamma/error.hpp"
#include "vwapgamma/rng.hpp"

using namespace vwapgamma;

namespace {

// Kolmogorov-Smirnov distance of a sample against a CDF.
template <typename Cdf>
double ks_distance(std::vector<double> x, Cdf cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

}  // namespace

// Reference words from numpy.random.Philox (4x64, 10 rounds), which bumps
// the counter before generating each block.
TEST(Philox, MatchesNumpyZeroKey) {
  RngStream stream(0, 0);
  const std::uint64_t expected[] = {
      0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL,
      0x809bf322883987c3ULL, 0x471128b9e807f7ddULL, 0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
  for (std::uint64_t word : expected) EXPECT_EQ(stream.next_u64(), word);
}

TEST(Philox, MatchesNumpyNonZeroKey) {
  RngStream stream(0x0123456789abcdefULL, 0xfedcba9876543210ULL);
  const std::uint64_t expected[] = {0x2d2e7c09c193c5faULL, 0xd56c6aa2d11f06aaULL,
                                    0x184fcdf7f5474a23ULL, 0x367832d087008054ULL};
  for (std::uint64_t word : expected) EXPECT_EQ(stream.next_u64(), word);
}

TEST(Philox, BlockFunctionIsPure) {
  const PhiloxCounter c{1, 0, 0, 0};
  const PhiloxKey k{0, 0};
  EXPECT_EQ(philox4x64_10(c, k), philox4x64_10(c, k));
  EXPECT_EQ(philox4x64_10(c, k)[0], 0x02f4ba6408e4d89bULL);
}

TEST(RngStream, SameKeyReplaysDifferentKeyDiffers) {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  int same_c = 0, same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    same_c += x == c.next_u64();
    same_d += x == d.next_u64();
  }
  EXPECT_EQ(same_c, 0);
  EXPECT_EQ(same_d, 0);
  EXPECT_EQ(a.seed(), 42u);
  EXPECT_EQ(a.stream_id(), 7u);
}

TEST(RngStream, UniformIsOpenUnitInterval) {
  RngStream s(1, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(RngStream, NormalMatchesBoostCdf) {
  RngStream s(3, 1);
  std::vector<double> x(100000);
  double sum = 0.0, sum2 = 0.0;
  for (double& v : x) {
    v = sample_standard_normal(s);
    sum += v;
    sum2 += v * v;
  }
  const double n = static_cast<double>(x.size());
  EXPECT_NEAR(sum / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(sum2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
  boost::math::normal_distribution<> z;
  // 1.63 / sqrt(n) is the 1% critical value of D_n.
  EXPECT_LT(ks_distance(x, [&](double v) { return boost::math::cdf(z, v); }), 1.63 / std::sqrt(n));
}

class GammaSampler : public ::testing::TestWithParam<double> {};

TEST_P(GammaSampler, MomentsAndDistributionMatchBoost) {
  const double alpha = GetParam();
  const double theta = 2.5;
  RngStream s(11, static_cast<std::uint64_t>(alpha * 1000));
  const int n = 100000;
  std::vector<double> x(n);
  double sum = 0.0, sum2 = 0.0;
  for (double& v : x) {
    v = sample_gamma(s, alpha, theta);
    ASSERT_GE(v, 0.0);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  const double true_mean = alpha * theta;
  const double true_var = alpha * theta * theta;
  EXPECT_NEAR(mean, true_mean, 4.0 * std::sqrt(true_var / n));
  // Var of the sample variance is about (kurtosis excess + 2) var^2 / n.
  EXPECT_NEAR(var, true_var, 4.0 * true_var * std::sqrt((6.0 / alpha + 2.0) / n));
  boost::math::gamma_distribution<> g(alpha, theta);
  EXPECT_LT(ks_distance(x, [&](double v) { return boost::math::cdf(g, v); }), 1.63 / std::sqrt(n));
}

INSTANTIATE_TEST_SUITE_P(Shapes, GammaSampler, ::testing::Values(0.05, 0.5, 1.0, 2.0, 4.0, 40.0, 1e4));

TEST(GammaSampler, RejectsInvalidParameters) {
  RngStream s(1, 1);
  EXPECT_THROW(sample_gamma(s, 0.0, 1.0), parameter_error);
  EXPECT_THROW(sample_gamma(s, -1.0, 1.0), parameter_error);
  EXPECT_THROW(sample_gamma(s, 1.0, 0.0), parameter_error);
  EXPECT_THROW(sample_gamma(s, std::nan(""), 1.0), parameter_error);
  EXPECT_THROW(sample_gamma(s, INFINITY, 1.0), parameter_error);
}
