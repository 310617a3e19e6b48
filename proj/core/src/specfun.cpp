#include "mmkde/specfun.hpp"

#include "mmkde/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mmkde {

namespace {

// Lanczos approximation, g = 671/128, 14 terms; relative accuracy ~1e-15
// for Re(z) >= 1/2.
constexpr double kLanczosG = 671.0 / 128.0;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
  57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
  -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
  -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
  .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
  -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kLogPi = 1.1447298858494001741;

template <typename T>
T lanczos_log_gamma(T z)
{
  T y = z;
  T tmp = z + kLanczosG;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  T ser = T(kLanczosC0);
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  // Lanczos form for Gamma(z+1); divide by z for Gamma(z).
  return tmp + std::log(kSqrt2Pi * ser) - std::log(z);
}

// Bernoulli coefficients B_{2k} / (2k (2k - 1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
  1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,
  -1.0 / 1680.0,        1.0 / 1188.0,          -691.0 / 360360.0,
  1.0 / 156.0,          -3617.0 / 122400.0};

template <typename T>
T stirling_tail(T x)
{
  T inv = 1.0 / x;
  T inv2 = inv * inv;
  T acc = T(0.0);
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it)
    acc = acc * inv2 + *it;
  return acc * inv;
}

bool is_pole(double re, double im)
{
  return im == 0.0 && re <= 0.0 && std::abs(re - std::round(re)) < 1e-14;
}

Complex sinpi(Complex z)
{
  double x = z.real();
  double y = z.imag();
  double s = std::sin(std::numbers::pi * x);
  double c = std::cos(std::numbers::pi * x);
  // sin(pi x) is exact at integers only if reduced first
  double r = x - 2.0 * std::floor(0.5 * x);
  if (r == 0.0 || r == 1.0)
    s = 0.0;
  return {s * std::cosh(std::numbers::pi * y), c * std::sinh(std::numbers::pi * y)};
}

} // namespace

Complex log1p(Complex w)
{
  double a = w.real();
  double b = w.imag();
  double re = 0.5 * std::log1p(2.0 * a + a * a + b * b);
  double im = std::atan2(b, 1.0 + a);
  return {re, im};
}

Complex log_gamma(Complex z)
{
  double x = z.real();
  double y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y))
    throw DomainError("log_gamma: non-finite argument");
  if (is_pole(x, y))
    throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(x));
  if (x >= 0.5) {
    Complex v = lanczos_log_gamma(z);
    if (y == 0.0)
      v.imag(0.0);
    return v;
  }
  // Upward recurrence keeps the analytic branch exactly.
  double shift = std::ceil(0.5 - x);
  if (shift <= 64.0 || std::abs(y) >= 100.0) {
    if (shift <= 4096.0 && y != 0.0) {
      Complex acc{0.0, 0.0};
      Complex w = z;
      for (int j = 0; j < static_cast<int>(shift); ++j) {
        acc += std::log(w);
        w += 1.0;
      }
      return lanczos_log_gamma(w) - acc;
    }
  }
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z),
  // with the 2 pi i correction restoring the analytic branch.
  double sgn = std::signbit(y) ? -1.0 : 1.0;
  double corr = sgn * 2.0 * std::numbers::pi * std::floor(0.5 * x + 0.25);
  Complex v = Complex(kLogPi, corr) - std::log(sinpi(z)) - log_gamma(Complex(1.0 - x, -y));
  return v;
}

double log_gamma(double x)
{
  if (!std::isfinite(x))
    throw DomainError("log_gamma: non-finite argument");
  if (x <= 0.0) {
    if (is_pole(x, 0.0))
      throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(x));
    throw DomainError("log_gamma(double): requires x > 0, use the complex overload");
  }
  return lanczos_log_gamma(x);
}

double log_gamma_ratio(double a, double d)
{
  if (!(a > 0.0))
    throw DomainError("log_gamma_ratio: requires a > 0");
  if (a < 10.0 || std::abs(d) > 0.5 * a)
    return log_gamma(a + d) - log_gamma(a);
  double t = d / a;
  return (a - 0.5) * std::log1p(t) + d * std::log(a + d) - d +
         (stirling_tail(a + d) - stirling_tail(a));
}

Complex log_gamma_ratio(double a, Complex d)
{
  if (!(a > 0.0))
    throw DomainError("log_gamma_ratio: requires a > 0");
  if (d.imag() == 0.0)
    return {log_gamma_ratio(a, d.real()), 0.0};
  if (a < 10.0 || std::abs(d) > 0.5 * a)
    return log_gamma(Complex(a, 0.0) + d) - log_gamma(Complex(a, 0.0));
  Complex t = d / a;
  Complex ad = a + d;
  return (a - 0.5) * log1p(t) + d * std::log(ad) - d +
         (stirling_tail(ad) - stirling_tail(Complex(a, 0.0)));
}

double log_beta(double a, double b)
{
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("log_beta: arguments must be positive");
  double hi = std::max(a, b);
  double lo = std::min(a, b);
  if (hi >= 10.0 && lo <= 0.5 * hi)
    return log_gamma(lo) - log_gamma_ratio(hi, lo);
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double f_log_density(double x, FParams p)
{
  if (!(p.d1 > 0.0) || !(p.d2 > 0.0))
    throw DomainError("f_density: degrees of freedom must be positive");
  if (!(x >= 0.0))
    throw DomainError("f_density: x must be >= 0");
  double a1 = 0.5 * p.d1;
  double a2 = 0.5 * p.d2;
  double r = a1 / a2;
  double c = a1 * std::log(r) - log_beta(a1, a2);
  if (x == 0.0) {
    if (a1 > 1.0)
      return -std::numeric_limits<double>::infinity();
    if (a1 < 1.0)
      return std::numeric_limits<double>::infinity();
    return c;
  }
  if (std::isinf(x))
    return -std::numeric_limits<double>::infinity();
  return c + (a1 - 1.0) * std::log(x) - (a1 + a2) * std::log1p(r * x);
}

double f_density(double x, FParams p)
{
  return std::exp(f_log_density(x, p));
}

} // namespace mmkde
