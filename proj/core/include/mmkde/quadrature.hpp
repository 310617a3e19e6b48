#pragma once

#include <functional>
#include <vector>

namespace mmkde {

//! Integrate f over (0, inf) after the substitution x = exp(t).
//!
//! The t-axis is split at log(b) for every breakpoint b > 0; finite pieces use
//! tanh-sinh, the two infinite ends use exp-sinh. Intended for tests and
//! oracles, not for estimator hot paths.
double integrate_half_line(const std::function<double(double)>& f,
                           std::vector<double> breakpoints = {});

//! Breakpoints exp(center + k * width) for k = -span..span, for densities
//! concentrated around exp(center) with log-scale spread `width`.
std::vector<double> log_breakpoints(double center, double width, int span = 8);

//! Integrate f over the finite interval [a, b] with tanh-sinh.
double integrate_interval(const std::function<double(double)>& f, double a, double b);

//! Integrate f over [0, inf) directly with exp-sinh (no substitution).
double integrate_zero_inf(const std::function<double(double)>& f);

} // namespace mmkde
