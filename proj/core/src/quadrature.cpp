#include "mmkde/quadrature.hpp"

#include "mmkde/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mmkde {

namespace {

// Maps t to f(e^t) e^t, treating non-finite values at the extremes as zero
// so that the double-exponential rules can probe far into the tails.
struct LogIntegrand
{
  const std::function<double(double)>& f;

  double operator()(double t) const
  {
    double x = std::exp(t);
    if (x == 0.0 || std::isinf(x))
      return 0.0;
    double v = f(x) * x;
    return std::isfinite(v) ? v : 0.0;
  }
};

} // namespace

std::vector<double> log_breakpoints(double center, double width, int span)
{
  std::vector<double> out;
  out.reserve(2 * span + 1);
  for (int k = -span; k <= span; ++k)
    out.push_back(std::exp(center + k * width));
  return out;
}

double integrate_half_line(const std::function<double(double)>& f,
                           std::vector<double> breakpoints)
{
  std::vector<double> ts;
  for (double b : breakpoints)
    if (b > 0.0 && std::isfinite(b))
      ts.push_back(std::log(b));
  if (ts.empty())
    ts.push_back(0.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  LogIntegrand g{f};
  boost::math::quadrature::tanh_sinh<double> ts_rule;
  boost::math::quadrature::exp_sinh<double> es_rule;
  double tol = std::sqrt(std::numeric_limits<double>::epsilon());
  double total = 0.0;

  total += es_rule.integrate(g, -std::numeric_limits<double>::infinity(), ts.front(), tol);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    total += ts_rule.integrate(g, ts[i], ts[i + 1], tol);
    }
  total += es_rule.integrate(g, ts.back(), std::numeric_limits<double>::infinity(), tol);
  if (!std::isfinite(total))
    throw DivergenceError("integrate_half_line: non-finite integral");
  return total;
}

double integrate_interval(const std::function<double(double)>& f, double a, double b)
{
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, a, b, std::sqrt(std::numeric_limits<double>::epsilon()));
}

double integrate_zero_inf(const std::function<double(double)>& f)
{
  boost::math::quadrature::exp_sinh<double> rule;
  auto g = [&f](double x) {
    double v = f(x);
    return std::isfinite(v) ? v : 0.0;
  };
  double total = rule.integrate(g, 0.0, std::numeric_limits<double>::infinity(),
                                std::sqrt(std::numeric_limits<double>::epsilon()));
  if (!std::isfinite(total))
    throw DivergenceError("integrate_zero_inf: non-finite integral");
  return total;
}

} // namespace mmkde
