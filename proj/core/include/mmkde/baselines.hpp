#pragma once

#include "mmkde/sample.hpp"

namespace mmkde {

//! n^-1 sum_k (x h sqrt(2 pi))^-1 exp(-(log x - log X_k)^2 / (2 h^2)).
double lognormal_kde(const Sample& s, double h, double x);

//! Gamma kernel estimator: mean over k of the Gamma(shape rho(x), scale b)
//! density at X_k, with rho(x) = x/b + 1 (original) or the boundary-patched
//! rule x/b for x >= 2b, (x/b)^2/4 + 1 below (modified).
double gamma_kernel_kde(const Sample& s, double b, double x, bool modified);

//! Reference bandwidth for the Gamma kernel estimators: the AMISE-optimal b
//! (E X^-1/2 / (2 sqrt(pi) int (x f'')^2))^(2/5) n^(-2/5) evaluated at a
//! method-of-moments Gamma fit whose shape is floored at 2.
double gamma_reference_bandwidth(const Sample& s);

//! Normal reference rule 1.06 sd(log X) n^(-1/5) on the log data.
double lognormal_reference_bandwidth(const Sample& s);

} // namespace mmkde
