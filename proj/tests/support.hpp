#pragma once

#include "mmkde/meijer.hpp"
#include "mmkde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace mmkde::testing {

inline constexpr double kPi = std::numbers::pi;

//! Breakpoints that resolve a kernel concentrated around nu with log-spread ~ gamma.
inline std::vector<double> kernel_breakpoints(const MeijerKernel& k)
{
  double width = std::clamp(k.gamma * std::max(1.0, k.shape.xi), 0.01, 1.0);
  return log_breakpoints(std::log(k.nu), width, 12);
}

//! int_0^inf g(x) L(x) dx by quadrature.
inline double kernel_integral(const MeijerKernel& k, const std::function<double(double)>& g)
{
  return integrate_half_line([&](double x) { return g(x) * kernel_density(k, x); },
                             kernel_breakpoints(k));
}

inline const std::vector<KernelShape>& nine_shapes()
{
  static const std::vector<KernelShape> shapes = [] {
    std::vector<KernelShape> out;
    for (double xi : {0.5, 1.0, 2.0})
      for (double th : {0.0, kPi / 4, kPi / 2})
        out.push_back({xi, th});
    return out;
  }();
  return shapes;
}

} // namespace mmkde::testing
