#include "mmkde/errors.hpp"
#include "mmkde/mellin.hpp"
#include "mmkde/rng.hpp"
#include "mmkde/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mmkde;

namespace {

Sample gamma_sample(std::size_t n, double shape, std::uint64_t seed, std::uint64_t stream = 0)
{
  Rng rng(seed, stream);
  std::vector<double> v(n);
  for (double& x : v)
    x = rng.gamma(shape, 1.0);
  return Sample(std::move(v));
}

} // namespace

TEST(Sample, Validation)
{
  EXPECT_THROW(Sample({1.0}), DomainError);
  EXPECT_NO_THROW(Sample({1.0}, 1));
  EXPECT_THROW(Sample({1.0, 0.0}), DomainError);
  EXPECT_THROW(Sample({1.0, -2.0}), DomainError);
  EXPECT_THROW(Sample({1.0, INFINITY}), DomainError);
  Sample s({2.0, 0.5, 4.0});
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s.min(), 0.5);
  EXPECT_EQ(s.max(), 4.0);
  EXPECT_NEAR(s.logs()[2], std::log(4.0), 1e-16);
}

TEST(EmpiricalMellin, Examples)
{
  Sample s({1.0, 2.0, 4.0});
  EXPECT_NEAR(std::abs(empirical_mellin(s, {1.0, 0.0}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(empirical_mellin(s, {2.0, 0.0}).real(), 7.0 / 3.0, 1e-14);
  Sample ones({1.0, 1.0, 1.0});
  Complex v = empirical_mellin(ones, {-2.3, 17.0});
  EXPECT_NEAR(v.real(), 1.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(EmpiricalMellin, ConjugateSymmetry)
{
  Sample s = gamma_sample(50, 2.0, 3);
  for (Complex z : {Complex(0.5, 3.0), Complex(1.5, 0.7), Complex(-1.0, 40.0)}) {
    Complex a = empirical_mellin(s, std::conj(z));
    Complex b = std::conj(empirical_mellin(s, z));
    EXPECT_LE(std::abs(a - b), 1e-12);
  }
}

TEST(EmpiricalMellin, ScalingLaw)
{
  Sample s = gamma_sample(40, 2.0, 5);
  for (double a : {0.1, 3.0})
    for (Complex z : {Complex(1.5, 0.0), Complex(0.5, 2.0), Complex(2.5, -4.0)}) {
      Complex lhs = empirical_mellin(s.scaled(a), z);
      Complex rhs = std::pow(a, z - 1.0) * empirical_mellin(s, z);
      EXPECT_LE(std::abs(lhs - rhs) / std::abs(rhs), 1e-10);
    }
}

TEST(EmpiricalMellin, ConvergesAtRootNRate)
{
  // E X^(1/2) for Gamma(2, 1) is Gamma(2.5)/Gamma(2)
  double truth = std::exp(log_gamma(2.5) - log_gamma(2.0));
  std::vector<double> lx, ly;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    double err = 0.0;
    for (std::uint64_t r = 0; r < 200; ++r)
      err += std::abs(empirical_mellin(gamma_sample(n, 2.0, 99, r + 1000 * n), {1.5, 0}) - truth);
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(err / 200));
  }
  double slope = (ly[2] - ly[0]) / (lx[2] - lx[0]);
  EXPECT_NEAR(slope, -0.5, 0.15);
}

TEST(MellinLine, Examples)
{
  Sample s = gamma_sample(30, 2.0, 17);
  MellinLine line = mellin_line(s, 0.5, 10.0, 0.5);
  ASSERT_EQ(line.omegas.size(), 21u);
  EXPECT_EQ(line.omegas.front(), 0.0);
  EXPECT_DOUBLE_EQ(line.omegas.back(), 10.0);
  EXPECT_EQ(line.values[0], empirical_mellin(s, {0.5, 0.0}));
  for (std::size_t j = 0; j < line.omegas.size(); ++j)
    EXPECT_NEAR(std::abs(line.values[j]),
                std::abs(empirical_mellin(s, {0.5, -line.omegas[j]})), 1e-14);
  EXPECT_THROW(mellin_line(s, 0.5, 10.0, 0.0), DomainError);
  EXPECT_THROW(mellin_line(s, 0.5, -1.0, 0.1), DomainError);
}

TEST(MellinLine, LogNormalShape)
{
  Rng rng(4242);
  std::vector<double> v(500);
  for (double& x : v)
    x = std::exp(rng.normal());
  Sample s(std::move(v));
  MellinLine line = mellin_line(s, 0.5, 40.0, 0.05);
  MellinLine exact = analytic_line("lognormal", {0, 1}, 0.5, 40.0, 0.05);
  // close to the analytic modulus near the origin, noise of order n^-1/2 far out
  EXPECT_NEAR(std::abs(line.values[0]), std::abs(exact.values[0]), 0.15);
  double tail = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < line.omegas.size(); ++j)
    if (line.omegas[j] > 10.0) {
      tail += std::norm(line.values[j]);
      ++count;
    }
  double rms = std::sqrt(tail / static_cast<double>(count));
  double scale = std::sqrt(std::exp(0.5) / 500.0); // sqrt(E X^-1 / n)
  EXPECT_GT(rms, 0.3 * scale);
  EXPECT_LT(rms, 3.0 * scale);
}

TEST(AnalyticMellin, Examples)
{
  EXPECT_NEAR(analytic_mellin("gamma", {2, 0.5}, {3, 0}).real(), 24.0, 1e-12);
  EXPECT_NEAR(analytic_mellin("exp", {1}, {2.5, 0}).real(), 1.3293403881791370205, 1e-13);
  EXPECT_NEAR(std::abs(analytic_mellin("lognormal", {0, 1}, {1, 0}) - 1.0), 0.0, 1e-15);
  Complex z(0.5, 2.0);
  Complex ln = analytic_mellin("lognormal", {0.3, 0.7}, z);
  Complex w = z - 1.0;
  EXPECT_LE(std::abs(ln - std::exp(0.3 * w + 0.245 * w * w)), 1e-14);
  EXPECT_THROW(analytic_mellin("nope", {1}, {1, 0}), LookupError);
  EXPECT_THROW(analytic_mellin("invgamma", {1, 1}, {3, 0}), StripError);
}

TEST(Parseval, Exponential)
{
  DensityGrid g;
  g.xs = linear_grid(1e-6, 40.0, 200001);
  for (double x : g.xs)
    g.ys.push_back(std::exp(-x));
  MellinLine line = analytic_line("exp", {1}, 1.0, 60.0, 0.001);
  EXPECT_LE(parseval_check(g, line), 1e-3);
}

TEST(Parseval, GammaTwo)
{
  DensityGrid g;
  g.xs = linear_grid(1e-6, 50.0, 200001);
  for (double x : g.xs)
    g.ys.push_back(x * std::exp(-x));
  MellinLine line = analytic_line("gamma", {2, 1}, 1.0, 60.0, 0.001);
  EXPECT_LE(parseval_check(g, line), 1e-3);
}

TEST(Parseval, ZeroGrid)
{
  DensityGrid g;
  g.xs = linear_grid(0.1, 1.0, 10);
  g.ys.assign(10, 0.0);
  MellinLine line;
  line.c = 1.0;
  line.omegas = {0.0, 1.0};
  line.values = {Complex(0, 0), Complex(0, 0)};
  EXPECT_EQ(parseval_check(g, line), 0.0);
}
