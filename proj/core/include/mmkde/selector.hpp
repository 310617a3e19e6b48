#pragma once

#include "mmkde/sample.hpp"

#include <string>
#include <vector>

namespace mmkde {

struct SelectorConfig
{
  double c = 1.5;
  double omega_step = 0.005;
  double omega_max = 500.0;
  double eta_floor = 1e-6;

  //! Throws DomainError on c <= 0, step <= 0 or omega_max <= step.
  void validate() const;
};

//! Everything the plug-in rule computed, for reporting.
struct SelectorResult
{
  double eta;
  double t0;
  double i_hat;
  //! n^-1 sum X_k^(2c - 3/2)
  double moment;
  bool floored;
};

//! First omega > 0 on the scan grid where |M(P_n; (c-1) + i omega)| has a
//! strict local minimum; cfg.omega_max when there is none.
double find_t0(const Sample& s, const SelectorConfig& cfg);

//! int_{-T}^{T} ((c(c-1) - w^2)^2 + (2c-1)^2 w^2) cos(a w) dw in closed form.
double weight_integral(double t, double a, double c);

//! (2 pi n^2)^-1 sum_k sum_k' (X_k X_k')^(c-2) weight_integral(t, log(X_k/X_k'), c).
double i_hat(const Sample& s, double c, double t);

//! ((2 sqrt(pi))^-1 moment / i_hat)^(1/5) n^(-1/5), floored at eta_floor.
double plugin_eta_from_parts(double moment, double i_hat_value, std::size_t n, double eta_floor);

//! The plug-in rule. Throws DegenerateError for a sample without log-spread
//! or when i_hat(T0) <= 1e-12.
SelectorResult plugin_select(const Sample& s, const SelectorConfig& cfg);
double plugin_eta(const Sample& s, const SelectorConfig& cfg);

//! Asymptotically optimal eta for a known density (catalog name or
//! "lognormal"), from its exact Mellin transform: the numerator moment is
//! M(f; 2c - 1/2) and the curvature integral int x^(2c+1) f''^2 dx is taken
//! through Parseval as (1/2pi) int |z (z-1) M(f; z-1)|^2 dw on Re z = c.
//! Throws DivergenceError when either quantity is infinite.
double oracle_eta(const std::string& name, const std::vector<double>& params, std::size_t n,
                  double c);

//! Curvature integral int_0^inf x^(2c+1) f''(x)^2 dx of oracle_eta.
double curvature_integral(const std::string& name, const std::vector<double>& params, double c);

} // namespace mmkde
