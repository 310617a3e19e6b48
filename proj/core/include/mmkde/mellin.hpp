#pragma once

#include "mmkde/sample.hpp"
#include "mmkde/specfun.hpp"

#include <string>
#include <vector>

namespace mmkde {

//! Transform values sampled at c + i*omega, omega = 0, step, ...
struct MellinLine
{
  double c = 0.0;
  std::vector<double> omegas;
  std::vector<Complex> values;
};

//! n^-1 sum_k X_k^(z-1), through the cached logs.
Complex empirical_mellin(const Sample& s, Complex z);

//! Modulus of empirical_mellin at c + i*omega (no complex temporaries).
double empirical_mellin_abs(const Sample& s, double c, double omega);

//! Empirical transform on omega = 0, step, ..., omega_max.
MellinLine mellin_line(const Sample& s, double c, double omega_max, double step);

//! Exact transform of a named distribution. "lognormal"(mu, sigma) uses its
//! closed form; every other name goes through the Meijer catalog.
Complex analytic_mellin(const std::string& name, const std::vector<double>& params, Complex z);

//! Same as analytic_mellin for every omega of a line template.
MellinLine analytic_line(const std::string& name, const std::vector<double>& params, double c,
                         double omega_max, double step);

//! |int x^(2c-1) f^2 dx - (1/2pi) int |M(f; c+i w)|^2 dw| with trapezoid
//! sums; the line holds omega >= 0 and is mirrored by conjugate symmetry.
double parseval_check(const DensityGrid& f_grid, const MellinLine& line);

} // namespace mmkde
