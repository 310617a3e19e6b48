#include "mmkde/baselines.hpp"
#include "mmkde/errors.hpp"
#include "mmkde/quadrature.hpp"
#include "mmkde/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace mmkde;

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

// Gamma(2, 1) density and its log-scale image g(s) = e^s f(e^s)
double gamma21(double x) { return x * std::exp(-x); }

// E lognormal_kde(x) under Gamma(2,1) data, using one-point samples of the estimator itself
double expected_lognormal_kde(double h, double x)
{
  auto g = [&](double y) { return lognormal_kde(Sample({y}, 1), h, x) * gamma21(y); };
  std::vector<double> bp;
  for (int k = -12; k <= 12; ++k)
    bp.push_back(x * std::exp(0.5 * h * k));
  bp.push_back(1.0);
  bp.push_back(4.0);
  return integrate_half_line(g, bp);
}

double slope(const std::vector<double>& hs, const std::vector<double>& bias)
{
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    mx += std::log(hs[i]);
    my += std::log(std::abs(bias[i]));
  }
  mx /= hs.size();
  my /= hs.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    double dx = std::log(hs[i]) - mx;
    sxy += dx * (std::log(std::abs(bias[i])) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

} // namespace

TEST(LognormalKde, Examples)
{
  for (double h : {0.1, 0.5, 2.0})
    EXPECT_NEAR(lognormal_kde(Sample({1.0}, 1), h, 1.0), 1.0 / (h * kSqrt2Pi), 1e-15);
  EXPECT_THROW(lognormal_kde(Sample({1.0}, 1), 0.0, 1.0), DomainError);
  EXPECT_THROW(lognormal_kde(Sample({1.0}, 1), 0.5, 0.0), DomainError);
}

TEST(LognormalKde, GaussianKdeOfLogData)
{
  Rng rng(3);
  std::vector<double> v(40);
  for (double& x : v)
    x = rng.gamma(1.5, 1.0);
  Sample s(v);
  double h = 0.3;
  for (double x : {0.05, 0.7, 2.0, 9.0}) {
    double kde = 0.0;
    for (double xk : v) {
      double u = (std::log(x) - std::log(xk)) / h;
      kde += std::exp(-0.5 * u * u) / (h * kSqrt2Pi);
    }
    kde /= v.size();
    EXPECT_NEAR(lognormal_kde(s, h, x), kde / x, 1e-13 * kde / x);
  }
}

// Leading bias term at x = 1 for Gamma(2,1) is h^2/2 (x^2 f'' + 3x f' + f) = 0,
// so this example checks the h^2 rate where the coefficient vanishes.
TEST(LognormalKde, BiasRateAtOne)
{
  std::vector<double> hs{0.4, 0.2, 0.1}, bias;
  for (double h : hs)
    bias.push_back(expected_lognormal_kde(h, 1.0) - gamma21(1.0));
  double sl = slope(hs, bias);
  EXPECT_NEAR(sl, 2.0, 0.4) << "bias " << bias[0] << " " << bias[1] << " " << bias[2];
}

TEST(LognormalKde, BiasRateAtTwo)
{
  double x = 2.0;
  double f = gamma21(x), f1 = (1 - x) * std::exp(-x), f2 = (x - 2) * std::exp(-x);
  double lead = 0.5 * (x * x * f2 + 3 * x * f1 + f);
  std::vector<double> hs{0.4, 0.2, 0.1}, bias;
  for (double h : hs)
    bias.push_back(expected_lognormal_kde(h, x) - f);
  EXPECT_NEAR(slope(hs, bias), 2.0, 0.4);
  EXPECT_NEAR(bias[2] / (0.01 * lead), 1.0, 0.05);
}

TEST(GammaKernelKde, Examples)
{
  EXPECT_NEAR(gamma_kernel_kde(Sample({1.0}, 1), 1.0, 1.0, false), std::exp(-1.0), 1e-15);
  Sample s({0.5, 1.0, 3.0});
  double b = 0.4;
  double want = (std::exp(-0.5 / b) + std::exp(-1.0 / b) + std::exp(-3.0 / b)) / (3 * b);
  EXPECT_NEAR(gamma_kernel_kde(s, b, 0.0, false), want, 1e-15);
  EXPECT_THROW(gamma_kernel_kde(s, 0.0, 1.0, false), DomainError);
  EXPECT_THROW(gamma_kernel_kde(s, 0.1, -1.0, true), DomainError);
}

TEST(GammaKernelKde, ModifiedShapeRule)
{
  Sample s({0.7, 1.2, 2.5, 4.0});
  double b = 0.25;
  auto direct = [&](double rho, double x) {
    (void)x;
    double sum = 0.0;
    for (double xk : s.values())
      sum += std::pow(xk, rho - 1) * std::exp(-xk / b) / (std::pow(b, rho) * std::tgamma(rho));
    return sum / 4.0;
  };
  for (double x : {0.0, 0.1, 0.3, 0.5, 0.8, 2.0}) {
    double r = x / b;
    double rho = x >= 2 * b ? r : 0.25 * r * r + 1.0;
    double want = direct(rho, x);
    EXPECT_NEAR(gamma_kernel_kde(s, b, x, true), want, 1e-12 * want) << x;
    double orig = direct(r + 1, x);
    EXPECT_NEAR(gamma_kernel_kde(s, b, x, false), orig, 1e-12 * orig) << x;
  }
  // continuous at the switch x = 2b
  double below = gamma_kernel_kde(s, b, 2 * b * (1 - 1e-9), true);
  double above = gamma_kernel_kde(s, b, 2 * b, true);
  EXPECT_NEAR(below, above, 1e-6 * above);
}

TEST(ReferenceBandwidth, GammaRule)
{
  Rng rng(12);
  std::vector<double> v(100);
  for (double& x : v)
    x = rng.gamma(3.0, 0.5);
  Sample s(v);
  double n = 100;
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double var = 0;
  for (double x : v)
    var += (x - mean) * (x - mean);
  var /= n - 1;
  double alpha = std::max(mean * mean / var, 2.0);
  double scale = mean / alpha;
  auto f2 = [&](double x) {
    // second derivative of the Gamma(alpha, scale) density
    double y = x / scale;
    double f = std::pow(y, alpha - 1) * std::exp(-y) / (scale * std::tgamma(alpha));
    double a1 = alpha - 1;
    return f / (scale * scale) * (a1 * (a1 - 1) / (y * y) - 2 * a1 / y + 1);
  };
  double curv = integrate_half_line([&](double x) { return x * x * f2(x) * f2(x); },
                                    {scale, alpha * scale, 4 * alpha * scale});
  double emx = std::tgamma(alpha - 0.5) / (std::tgamma(alpha) * std::sqrt(scale));
  double want = std::pow(emx / (2 * std::sqrt(std::numbers::pi) * curv), 0.4) * std::pow(n, -0.4);
  EXPECT_NEAR(gamma_reference_bandwidth(s), want, 1e-7 * want);
  EXPECT_THROW(gamma_reference_bandwidth(Sample({2.0, 2.0, 2.0})), DegenerateError);
}

TEST(ReferenceBandwidth, LognormalRule)
{
  Sample s({1.0, std::exp(1.0), std::exp(2.0)});
  EXPECT_NEAR(lognormal_reference_bandwidth(s), 1.06 * 1.0 * std::pow(3.0, -0.2), 1e-15);
  EXPECT_THROW(lognormal_reference_bandwidth(Sample({2.0, 2.0})), DegenerateError);
}
