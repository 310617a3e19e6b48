#pragma once

#include <complex>

namespace mmkde {

using Complex = std::complex<double>;

//! Degrees of freedom of a Fisher-Snedecor F(d1, d2) distribution.
struct FParams
{
  double d1;
  double d2;
};

//! Log-gamma on the analytic branch: real for z > 0, continuous on the
//! plane cut along the non-positive real axis, and satisfying
//! log_gamma(z + 1) == log_gamma(z) + log(z) with the principal log.
//! Throws PoleError at non-positive integers (tolerance 1e-14) and
//! DomainError on non-finite input.
Complex log_gamma(Complex z);

//! Real log-gamma for x > 0. Thread-safe (does not touch `signgam`).
double log_gamma(double x);

//! log Gamma(a + d) - log Gamma(a) for real a > 0, without the cancellation
//! a direct difference suffers when a is large and |d| is comparatively small.
double log_gamma_ratio(double a, double d);
Complex log_gamma_ratio(double a, Complex d);

//! log B(a, b) for a, b > 0.
double log_beta(double a, double b);

//! log of the F(d1, d2) density at x >= 0 (may be -inf or +inf at x = 0).
double f_log_density(double x, FParams p);

//! F(d1, d2) density at x >= 0; evaluated as exp(log-density).
double f_density(double x, FParams p);

//! log(1 + w) for complex w, accurate for small |w|.
Complex log1p(Complex w);

} // namespace mmkde
