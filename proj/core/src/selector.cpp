#include "mmkde/selector.hpp"

#include "mmkde/errors.hpp"
#include "mmkde/mellin.hpp"
#include "mmkde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mmkde {

namespace {

// J_m(T; a) = int_0^T w^(2m) cos(a w) dw for m = 0, 1, 2.
struct Moments
{
  double j0;
  double j1;
  double j2;
};

Moments cosine_moments_series(double t, double a)
{
  // sum_j (-1)^j a^(2j) T^(2m+2j+1) / ((2j)! (2m+2j+1))
  double x2 = (a * t) * (a * t);
  double term = 1.0; // (-1)^j (aT)^(2j) / (2j)!
  Moments m{0.0, 0.0, 0.0};
  for (int j = 0; j < 60; ++j) {
    double k = 2.0 * j;
    m.j0 += term / (k + 1.0);
    m.j1 += term / (k + 3.0);
    m.j2 += term / (k + 5.0);
    term *= -x2 / ((k + 1.0) * (k + 2.0));
    if (std::abs(term) < 1e-18)
      break;
  }
  double t2 = t * t;
  m.j0 *= t;
  m.j1 *= t * t2;
  m.j2 *= t * t2 * t2;
  return m;
}

Moments cosine_moments(double t, double a)
{
  if (std::abs(a) < 1e-10 || std::abs(a * t) < 2.0)
    return cosine_moments_series(t, a);
  double s = std::sin(a * t);
  double c = std::cos(a * t);
  double ia = 1.0 / a;
  double t2 = t * t;
  Moments m;
  m.j0 = s * ia;
  m.j1 = t2 * s * ia + 2 * t * c * ia * ia - 2 * s * ia * ia * ia;
  m.j2 = t2 * t2 * s * ia + 4 * t2 * t * c * ia * ia - 12 * t2 * s * ia * ia * ia -
         24 * t * c * ia * ia * ia * ia + 24 * s * ia * ia * ia * ia * ia;
  return m;
}

double abs_mellin_at(const std::vector<double>& logs, double shift, double omega)
{
  CompensatedSum re;
  CompensatedSum im;
  for (double l : logs) {
    double m = std::exp(shift * l);
    re.add(m * std::cos(omega * l));
    im.add(m * std::sin(omega * l));
  }
  return std::hypot(re.value(), im.value()) / static_cast<double>(logs.size());
}

} // namespace

void SelectorConfig::validate() const
{
  if (!std::isfinite(c) || !(c > 0.0))
    throw DomainError("selector: c must be positive");
  if (!std::isfinite(omega_step) || !(omega_step > 0.0))
    throw DomainError("selector: omega step must be positive");
  if (!std::isfinite(omega_max) || !(omega_max > omega_step))
    throw DomainError("selector: omega_max must exceed the step");
  if (!std::isfinite(eta_floor) || !(eta_floor > 0.0))
    throw DomainError("selector: eta floor must be positive");
}

double find_t0(const Sample& s, const SelectorConfig& cfg)
{
  cfg.validate();
  const auto& logs = s.logs();
  double shift = cfg.c - 2.0; // exponent of X_k on the line Re z = c - 1
  auto count = static_cast<std::size_t>(std::floor(cfg.omega_max / cfg.omega_step + 1e-9));
  double prev = abs_mellin_at(logs, shift, 0.0);
  double cur = abs_mellin_at(logs, shift, cfg.omega_step);
  double peak = std::max(prev, cur);
  for (std::size_t j = 1; j < count; ++j) {
    double next = abs_mellin_at(logs, shift, static_cast<double>(j + 1) * cfg.omega_step);
    peak = std::max(peak, next);
    double tol = 1e-12 * peak;
    if (cur < prev - tol && cur < next - tol)
      return static_cast<double>(j) * cfg.omega_step;
    prev = cur;
    cur = next;
  }
  return cfg.omega_max;
}

double weight_integral(double t, double a, double c)
{
  double p = c * (c - 1.0);
  double b = (2.0 * c - 1.0) * (2.0 * c - 1.0) - 2.0 * p;
  Moments m = cosine_moments(t, a);
  return 2.0 * (m.j2 + b * m.j1 + p * p * m.j0);
}

double i_hat(const Sample& s, double c, double t)
{
  if (!std::isfinite(t) || !(t > 0.0))
    throw DomainError("i_hat: T must be positive");
  if (!std::isfinite(c))
    throw DomainError("i_hat: c must be finite");
  const auto& logs = s.logs();
  std::size_t n = logs.size();
  double e = c - 2.0;
  double diag = weight_integral(t, 0.0, c);
  CompensatedSum acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc.add(std::exp(2.0 * e * logs[k]) * diag);
    for (std::size_t j = k + 1; j < n; ++j) {
      double w = std::exp(e * (logs[k] + logs[j]));
      acc.add(2.0 * w * weight_integral(t, logs[k] - logs[j], c));
    }
  }
  double nn = static_cast<double>(n);
  return acc.value() / (2.0 * std::numbers::pi * nn * nn);
}

double plugin_eta_from_parts(double moment, double i_hat_value, std::size_t n, double eta_floor)
{
  if (!(i_hat_value > 1e-12))
    throw DegenerateError("plug-in selector: curvature estimate vanishes");
  double ratio = moment / (2.0 * std::sqrt(std::numbers::pi) * i_hat_value);
  double eta = std::pow(ratio, 0.2) * std::pow(static_cast<double>(n), -0.2);
  return std::max(eta, eta_floor);
}

SelectorResult plugin_select(const Sample& s, const SelectorConfig& cfg)
{
  cfg.validate();
  const auto& logs = s.logs();
  auto [lo, hi] = std::minmax_element(logs.begin(), logs.end());
  if (*hi - *lo == 0.0)
    throw DegenerateError("plug-in selector: all observations are equal");
  SelectorResult r{};
  r.t0 = find_t0(s, cfg);
  r.i_hat = i_hat(s, cfg.c, r.t0);
  CompensatedSum m;
  for (double l : logs)
    m.add(std::exp((2.0 * cfg.c - 1.5) * l));
  r.moment = m.value() / static_cast<double>(s.n());
  double raw = plugin_eta_from_parts(r.moment, r.i_hat, s.n(), std::numeric_limits<double>::min());
  r.eta = std::max(raw, cfg.eta_floor);
  r.floored = raw < cfg.eta_floor;
  return r;
}

double plugin_eta(const Sample& s, const SelectorConfig& cfg)
{
  return plugin_select(s, cfg).eta;
}

double curvature_integral(const std::string& name, const std::vector<double>& params, double c)
{
  auto integrand = [&](double w) {
    Complex z(c, w);
    return std::norm(z * (z - 1.0) * analytic_mellin(name, params, z - 1.0));
  };
  try {
    analytic_mellin(name, params, Complex(c - 1.0, 0.0));
  } catch (const StripError& e) {
    throw DivergenceError(std::string("curvature integral diverges: ") + e.what());
  }
  // |M| is even in w; integrate the half line and double
  return 2.0 * integrate_zero_inf(integrand) / (2.0 * std::numbers::pi);
}

double oracle_eta(const std::string& name, const std::vector<double>& params, std::size_t n,
                  double c)
{
  if (n == 0)
    throw DomainError("oracle_eta: n must be positive");
  double moment = 0.0;
  try {
    moment = analytic_mellin(name, params, Complex(2.0 * c - 0.5, 0.0)).real();
  } catch (const StripError& e) {
    throw DivergenceError(std::string("moment integral diverges: ") + e.what());
  }
  double curv = curvature_integral(name, params, c);
  double ratio = moment / (2.0 * std::sqrt(std::numbers::pi) * curv);
  return std::pow(ratio, 0.2) * std::pow(static_cast<double>(n), -0.2);
}

} // namespace mmkde
