#include "mmkde/catalog.hpp"
#include "mmkde/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace mmkde;

namespace {

constexpr double kPi = std::numbers::pi;

double G(double x)
{
  return std::tgamma(x);
}

double B(double a, double b)
{
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

struct Row
{
  const char* name;
  std::vector<double> params;
  std::function<double(double)> pdf;
};

std::vector<Row> closed_forms()
{
  return {
    {"betaprime", {2, 3}, [](double x) { return std::pow(x, 1) * std::pow(1 + x, -5) / B(2, 3); }},
    {"burr", {2, 3}, [](double x) { return 2 * 3 * x / std::pow(1 + x * x, 4); }},
    {"chi", {3}, [](double x) { return std::pow(2, -0.5) * x * x * std::exp(-x * x / 2) / G(1.5); }},
    {"chi2", {3}, [](double x) { return std::sqrt(x) * std::exp(-x / 2) / (std::pow(2, 1.5) * G(1.5)); }},
    {"dagum", {2, 1.5, 3},
     [](double x) {
       double a = 2, b = 1.5, p = 3;
       return a * p * std::pow(x, a * p - 1) / (std::pow(b, a * p) * std::pow(1 + std::pow(x / b, a), p + 1));
     }},
    {"erlang", {2, 3}, [](double x) { return x * x * std::exp(-x / 2) / (8 * G(3)); }},
    {"fisher", {3, 5},
     [](double x) {
       double d1 = 3, d2 = 5;
       return std::sqrt(std::pow(d1 * x, d1) * std::pow(d2, d2) / std::pow(d1 * x + d2, d1 + d2)) /
              (x * B(d1 / 2, d2 / 2));
     }},
    {"frechet", {2, 1.5},
     [](double x) { return 2 / 1.5 * std::pow(x / 1.5, -3) * std::exp(-std::pow(x / 1.5, -2)); }},
    {"gamma", {2, 0.5}, [](double x) { return 0.25 * x * std::exp(-0.5 * x); }},
    {"gpd", {2.0 / 3, 2.0 / 3}, [](double x) { return 1.5 * std::pow(1 + x, -2.5); }},
    {"invgamma", {2, 3}, [](double x) { return 9 / G(2) * std::pow(x, -3) * std::exp(-3 / x); }},
    {"levy", {1.5},
     [](double x) { return std::sqrt(1.5 / (2 * kPi)) * std::exp(-1.5 / (2 * x)) / std::pow(x, 1.5); }},
    {"loglogistic", {2, 3},
     [](double x) { return 1.5 * std::pow(x / 2, 2) / std::pow(1 + std::pow(x / 2, 3), 2); }},
    {"maxwell", {1.5},
     [](double x) {
       double s = 1.5;
       return std::sqrt(2 / kPi) * x * x * std::exp(-x * x / (2 * s * s)) / (s * s * s);
     }},
    {"nakagami", {1, 2}, [](double x) { return x * std::exp(-x * x / 2); }},
    {"rayleigh", {1.5}, [](double x) { return x / 2.25 * std::exp(-x * x / 4.5); }},
    {"singhmaddala", {2, 1.5, 3},
     [](double x) {
       double a = 2, b = 1.5, q = 3;
       return a * q / b * std::pow(x / b, a - 1) / std::pow(1 + std::pow(x / b, a), q + 1);
     }},
    {"stacy", {1.5, 2, 3},
     [](double x) {
       double a = 1.5, d = 2, p = 3;
       return p / (std::pow(a, d) * G(d / p)) * std::pow(x, d - 1) * std::exp(-std::pow(x / a, p));
     }},
    {"weibull", {1, 2}, [](double x) { return 2 * x * std::exp(-x * x); }},
  };
}

} // namespace

TEST(Catalog, HasNineteenRows)
{
  EXPECT_EQ(catalog_names().size(), 19u);
  EXPECT_EQ(closed_forms().size(), 19u);
}

TEST(Catalog, Examples)
{
  MeijerKernel k = catalog_params("Gamma", {2, 0.5});
  EXPECT_NEAR(k.nu, 4, 1e-15);
  EXPECT_NEAR(k.gamma, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(k.shape.xi, 1);
  EXPECT_EQ(k.shape.theta, 0);
  k = catalog_params("weibull", {1, 2});
  EXPECT_EQ(k.nu, 1);
  EXPECT_EQ(k.gamma, 0.5);
  EXPECT_EQ(k.shape.xi, 0.5);
  EXPECT_EQ(k.shape.theta, 0);
  k = catalog_params("Levy", {1});
  EXPECT_EQ(k.nu, 1);
  EXPECT_NEAR(k.gamma, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(k.shape.theta, kPi / 2);
  k = catalog_params("beta-prime", {2, 3});
  EXPECT_DOUBLE_EQ(k.shape.theta, std::atan(std::sqrt(2.0 / 3.0)));
}

TEST(Catalog, MatchesClosedFormDensities)
{
  for (const auto& row : closed_forms()) {
    MeijerKernel k = catalog_params(row.name, row.params);
    for (int i = 0; i < 50; ++i) {
      double x = std::pow(10.0, -1.5 + 2.5 * i / 49.0);
      double want = row.pdf(x);
      double got = kernel_density(k, x);
      if (want < 1e-280)
        continue;
      EXPECT_NEAR(got / want, 1.0, 1e-8) << row.name << " at x=" << x;
    }
  }
}

TEST(Catalog, Aliases)
{
  MeijerKernel e = catalog_params("exp", {2.0});
  EXPECT_NEAR(kernel_density(e, 0.7), 2 * std::exp(-1.4), 1e-14);
  MeijerKernel iw = catalog_params("invweibull", {1, 2});
  EXPECT_NEAR(kernel_density(iw, 1.3), 2 * std::pow(1.3, -3) * std::exp(-1 / (1.3 * 1.3)), 1e-13);
  MeijerKernel c = catalog_params("chi-squared", {3});
  EXPECT_EQ(c.nu, 3);
}

TEST(Catalog, Errors)
{
  EXPECT_THROW(catalog_params("cauchy", {1}), LookupError);
  EXPECT_THROW(catalog_params("gamma", {1}), DomainError);
  EXPECT_THROW(catalog_params("gamma", {-1, 2}), DomainError);
  EXPECT_THROW(catalog_params("weibull", {1, NAN}), DomainError);
}
