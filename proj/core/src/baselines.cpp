#include "mmkde/baselines.hpp"

#include "mmkde/errors.hpp"
#include "mmkde/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mmkde {

namespace {

// int_0^inf x^2 f''(x)^2 dx for the unit-scale Gamma(alpha) density.
double gamma_curvature(double alpha)
{
  double q2 = (alpha - 1.0) * (alpha - 2.0);
  double q1 = -2.0 * (alpha - 1.0);
  const std::pair<int, double> terms[] = {
    {-2, q2 * q2}, {-1, 2.0 * q2 * q1}, {0, q1 * q1 + 2.0 * q2}, {1, 2.0 * q1}, {2, 1.0}};
  double lg = log_gamma(alpha);
  double total = 0.0;
  for (auto [k, coef] : terms) {
    if (coef == 0.0)
      continue;
    double s = 2.0 * alpha - 1.0 + k;
    total += coef * std::exp(log_gamma(s) - 2.0 * lg - s * std::numbers::ln2);
  }
  return total;
}

} // namespace

double lognormal_kde(const Sample& s, double h, double x)
{
  if (!std::isfinite(h) || !(h > 0.0))
    throw DomainError("lognormal_kde: h must be positive");
  if (!std::isfinite(x) || !(x > 0.0))
    throw DomainError("lognormal_kde: x must be positive");
  double lx = std::log(x);
  double norm = 1.0 / (x * h * std::sqrt(2.0 * std::numbers::pi));
  CompensatedSum acc;
  for (double l : s.logs()) {
    double u = (lx - l) / h;
    acc.add(std::exp(-0.5 * u * u));
  }
  return norm * acc.value() / static_cast<double>(s.n());
}

double gamma_kernel_kde(const Sample& s, double b, double x, bool modified)
{
  if (!std::isfinite(b) || !(b > 0.0))
    throw DomainError("gamma_kernel_kde: b must be positive");
  if (std::isnan(x) || x < 0.0 || std::isinf(x))
    throw DomainError("gamma_kernel_kde: x must be >= 0");
  double r = x / b;
  double rho = r + 1.0;
  if (modified)
    rho = x >= 2.0 * b ? r : 0.25 * r * r + 1.0;
  double lb = std::log(b);
  double c0 = -rho * lb - log_gamma(rho);
  CompensatedSum acc;
  const auto& xs = s.values();
  const auto& logs = s.logs();
  for (std::size_t k = 0; k < xs.size(); ++k)
    acc.add(std::exp(c0 + (rho - 1.0) * logs[k] - xs[k] / b));
  return acc.value() / static_cast<double>(s.n());
}

double gamma_reference_bandwidth(const Sample& s)
{
  const auto& xs = s.values();
  double n = static_cast<double>(xs.size());
  double mean = compensated_sum(xs) / n;
  CompensatedSum ss;
  for (double v : xs)
    ss.add((v - mean) * (v - mean));
  double var = ss.value() / (n - 1.0);
  if (!(var > 0.0))
    throw DegenerateError("gamma reference bandwidth: zero sample variance");
  double alpha = std::max(mean * mean / var, 2.0);
  // keep the fitted mean when the shape is floored
  double scale = mean / alpha;
  double num = std::exp(log_gamma(alpha - 0.5) - log_gamma(alpha));
  double den = 2.0 * std::sqrt(std::numbers::pi) * gamma_curvature(alpha);
  return scale * std::pow(num / den, 0.4) * std::pow(n, -0.4);
}

double lognormal_reference_bandwidth(const Sample& s)
{
  const auto& logs = s.logs();
  double n = static_cast<double>(logs.size());
  double mean = compensated_sum(logs) / n;
  CompensatedSum ss;
  for (double l : logs)
    ss.add((l - mean) * (l - mean));
  double sd = std::sqrt(ss.value() / (n - 1.0));
  if (!(sd > 0.0))
    throw DegenerateError("log-normal reference bandwidth: zero spread of log data");
  return 1.06 * sd * std::pow(n, -0.2);
}

} // namespace mmkde
