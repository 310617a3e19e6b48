#include "mmkde/mellin.hpp"

#include "mmkde/catalog.hpp"
#include "mmkde/errors.hpp"
#include "mmkde/meijer.hpp"

#include <cmath>
#include <numbers>

namespace mmkde {

namespace {

std::vector<double> omega_grid(double omega_max, double step)
{
  if (!std::isfinite(step) || !(step > 0.0))
    throw DomainError("mellin line: step must be positive");
  if (!std::isfinite(omega_max) || !(omega_max > 0.0))
    throw DomainError("mellin line: omega_max must be positive");
  auto count = static_cast<std::size_t>(std::floor(omega_max / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j)
    out[j] = static_cast<double>(j) * step;
  return out;
}

} // namespace

Complex empirical_mellin(const Sample& s, Complex z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("empirical_mellin: non-finite argument");
  double a = z.real() - 1.0;
  double w = z.imag();
  CompensatedSum re;
  CompensatedSum im;
  for (double l : s.logs()) {
    double m = std::exp(a * l);
    re.add(m * std::cos(w * l));
    im.add(m * std::sin(w * l));
  }
  double inv_n = 1.0 / static_cast<double>(s.n());
  return {re.value() * inv_n, im.value() * inv_n};
}

double empirical_mellin_abs(const Sample& s, double c, double omega)
{
  return std::abs(empirical_mellin(s, Complex(c, omega)));
}

MellinLine mellin_line(const Sample& s, double c, double omega_max, double step)
{
  MellinLine line;
  line.c = c;
  line.omegas = omega_grid(omega_max, step);
  line.values.reserve(line.omegas.size());
  for (double w : line.omegas)
    line.values.push_back(empirical_mellin(s, Complex(c, w)));
  return line;
}

Complex analytic_mellin(const std::string& name, const std::vector<double>& params, Complex z)
{
  if (normalize_name(name) == "lognormal") {
    if (params.size() != 2)
      throw DomainError("lognormal expects 2 parameters (mu, sigma)");
    double mu = params[0];
    double sigma = params[1];
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > 0.0))
      throw DomainError("lognormal: sigma must be positive");
    Complex w = z - 1.0;
    return std::exp(mu * w + 0.5 * sigma * sigma * w * w);
  }
  return kernel_mellin(catalog_params(name, params), z);
}

MellinLine analytic_line(const std::string& name, const std::vector<double>& params, double c,
                         double omega_max, double step)
{
  MellinLine line;
  line.c = c;
  line.omegas = omega_grid(omega_max, step);
  line.values.reserve(line.omegas.size());
  for (double w : line.omegas)
    line.values.push_back(analytic_mellin(name, params, Complex(c, w)));
  return line;
}

double parseval_check(const DensityGrid& f_grid, const MellinLine& line)
{
  if (f_grid.xs.size() != f_grid.ys.size())
    throw DomainError("parseval_check: grid sizes differ");
  if (line.omegas.size() != line.values.size())
    throw DomainError("parseval_check: line sizes differ");
  CompensatedSum lhs;
  for (std::size_t i = 0; i + 1 < f_grid.xs.size(); ++i) {
    double x0 = f_grid.xs[i];
    double x1 = f_grid.xs[i + 1];
    double g0 = std::pow(x0, 2 * line.c - 1) * f_grid.ys[i] * f_grid.ys[i];
    double g1 = std::pow(x1, 2 * line.c - 1) * f_grid.ys[i + 1] * f_grid.ys[i + 1];
    lhs.add(0.5 * (x1 - x0) * (g0 + g1));
  }
  CompensatedSum rhs;
  for (std::size_t j = 0; j + 1 < line.omegas.size(); ++j) {
    double h = line.omegas[j + 1] - line.omegas[j];
    rhs.add(0.5 * h * (std::norm(line.values[j]) + std::norm(line.values[j + 1])));
  }
  // the half line carries half of the symmetric integral
  double right = 2.0 * rhs.value() / (2.0 * std::numbers::pi);
  return std::abs(lhs.value() - right);
}

} // namespace mmkde
