#include "mmkde/meijer.hpp"

#include "mmkde/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mmkde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double softplus(double s)
{
  if (s > 35.0)
    return s + std::exp(-s);
  return std::log1p(std::exp(s));
}

std::string describe(const MeijerKernel& k)
{
  std::ostringstream os;
  os.precision(17);
  os << "(nu=" << k.nu << ", gamma=" << k.gamma << ", xi=" << k.shape.xi
     << ", theta=" << k.shape.theta << ")";
  return os.str();
}

void check_strip(const HolomorphyStrip& s, Complex z, const MeijerKernel& k)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("non-finite Mellin argument");
  if (!s.contains(z.real())) {
    std::ostringstream os;
    os.precision(17);
    os << "Re(z) = " << z.real() << " outside strip (" << s.lower << ", " << s.upper
       << ") of kernel " << describe(k);
    throw StripError(os.str());
  }
}

} // namespace

KernelBranch kernel_branch(const KernelShape& s)
{
  if (s.theta < kThetaBranchTol)
    return KernelBranch::gamma;
  if (std::abs(s.theta - std::numbers::pi / 2) < kThetaBranchTol)
    return KernelBranch::inv_gamma;
  return KernelBranch::fisher;
}

void validate(const KernelShape& s)
{
  if (!std::isfinite(s.xi) || !(s.xi > 0.0))
    throw DomainError("kernel shape: xi must be positive and finite");
  if (!std::isfinite(s.theta) || s.theta < 0.0 ||
      s.theta > std::numbers::pi / 2 + kThetaBranchTol)
    throw DomainError("kernel shape: theta must lie in [0, pi/2]");
}

void validate(const MeijerKernel& k)
{
  validate(k.shape);
  if (!std::isfinite(k.nu) || !(k.nu > 0.0))
    throw DomainError("kernel: nu must be positive and finite");
  if (!std::isfinite(k.gamma) || !(k.gamma > 0.0))
    throw DomainError("kernel: gamma must be positive and finite");
}

FisherShapes fisher_shapes(const MeijerKernel& k)
{
  double xi = k.shape.xi;
  double base = xi * xi / (k.gamma * k.gamma);
  switch (kernel_branch(k.shape)) {
  case KernelBranch::gamma:
    return {base, kInf};
  case KernelBranch::inv_gamma:
    return {kInf, base};
  case KernelBranch::fisher:
    break;
  }
  double c = std::cos(k.shape.theta);
  double s = std::sin(k.shape.theta);
  return {base / (c * c), base / (s * s)};
}

HolomorphyStrip kernel_strip(const MeijerKernel& k)
{
  validate(k);
  auto [a1, a2] = fisher_shapes(k);
  double xi = k.shape.xi;
  return {std::isinf(a1) ? -kInf : 1.0 - a1 / xi, std::isinf(a2) ? kInf : 1.0 + a2 / xi};
}

HolomorphyStrip kernel_sq_strip(const MeijerKernel& k)
{
  validate(k);
  auto [a1, a2] = fisher_shapes(k);
  double xi = k.shape.xi;
  return {std::isinf(a1) ? -kInf : 2.0 - 2.0 * a1 / xi,
          std::isinf(a2) ? kInf : 2.0 + 2.0 * a2 / xi};
}

Complex kernel_log_mellin(const MeijerKernel& k, Complex z)
{
  check_strip(kernel_strip(k), z, k);
  if (z == Complex(1.0, 0.0))
    return {0.0, 0.0};
  double xi = k.shape.xi;
  Complex w = z - 1.0;
  Complex s = xi * w;
  Complex out = w * std::log(k.nu);
  auto [a1, a2] = fisher_shapes(k);
  switch (kernel_branch(k.shape)) {
  case KernelBranch::gamma:
    out += -s * std::log(a1) + log_gamma_ratio(a1, s);
    break;
  case KernelBranch::inv_gamma:
    out += s * std::log(a2) + log_gamma_ratio(a2, -s);
    break;
  case KernelBranch::fisher: {
    // a2 / a1 = cot^2(theta)
    double log_cot2 = -2.0 * std::log(std::tan(k.shape.theta));
    out += s * log_cot2 + log_gamma_ratio(a1, s) + log_gamma_ratio(a2, -s);
    break;
  }
  }
  return out;
}

Complex kernel_mellin(const MeijerKernel& k, Complex z)
{
  if (z == Complex(1.0, 0.0)) {
    validate(k);
    return {1.0, 0.0};
  }
  return std::exp(kernel_log_mellin(k, z));
}

Complex kernel_mellin_sq(const MeijerKernel& k, Complex z)
{
  check_strip(kernel_sq_strip(k), z, k);
  double xi = k.shape.xi;
  Complex s = xi * (z - 2.0);
  Complex out = (z - 2.0) * std::log(k.nu) - std::log(xi);
  auto [a1, a2] = fisher_shapes(k);
  switch (kernel_branch(k.shape)) {
  case KernelBranch::gamma:
    out += -2.0 * a1 * std::numbers::ln2 - log_beta(a1, a1) + log_gamma_ratio(2.0 * a1, s) -
           s * std::log(2.0 * a1);
    break;
  case KernelBranch::inv_gamma:
    out += -2.0 * a2 * std::numbers::ln2 - log_beta(a2, a2) + log_gamma_ratio(2.0 * a2, -s) +
           s * std::log(2.0 * a2);
    break;
  case KernelBranch::fisher: {
    double log_cot2 = -2.0 * std::log(std::tan(k.shape.theta));
    out += log_beta(2.0 * a1, 2.0 * a2) - 2.0 * log_beta(a1, a2) + s * log_cot2 +
           log_gamma_ratio(2.0 * a1, s) + log_gamma_ratio(2.0 * a2, -s);
    break;
  }
  }
  return std::exp(out);
}

double head_exponent(const MeijerKernel& k)
{
  KernelForm f = KernelForm::from(k);
  return f.branch == KernelBranch::inv_gamma ? 0.0 : f.p;
}

KernelForm KernelForm::from(const MeijerKernel& k)
{
  validate(k);
  KernelForm f{};
  f.branch = kernel_branch(k.shape);
  f.log_nu = std::log(k.nu);
  f.inv_xi = 1.0 / k.shape.xi;
  double xi = k.shape.xi;
  auto [a1, a2] = fisher_shapes(k);
  double lead = -std::log(k.nu * xi);
  switch (f.branch) {
  case KernelBranch::gamma:
    f.c0 = lead + a1 * std::log(a1) - log_gamma(a1);
    f.p = a1 / xi - 1.0;
    f.q = a1;
    break;
  case KernelBranch::inv_gamma:
    f.c0 = lead + a2 * std::log(a2) - log_gamma(a2);
    f.p = -a2 / xi - 1.0;
    f.q = a2;
    break;
  case KernelBranch::fisher:
    f.log_r = 2.0 * std::log(std::tan(k.shape.theta));
    f.c0 = lead + a1 * f.log_r - log_beta(a1, a2);
    f.p = a1 / xi - 1.0;
    f.q = a1 + a2;
    break;
  }
  return f;
}

double KernelForm::log_density_at_log(double log_x) const
{
  double l = log_x - log_nu;
  double u = l * inv_xi;
  switch (branch) {
  case KernelBranch::gamma:
    return c0 + p * l - q * std::exp(u);
  case KernelBranch::inv_gamma:
    return c0 + p * l - q * std::exp(-u);
  case KernelBranch::fisher:
    break;
  }
  return c0 + p * l - q * softplus(log_r + u);
}

double KernelForm::at_zero() const
{
  if (branch == KernelBranch::inv_gamma || p > 0.0)
    return 0.0;
  if (p < 0.0)
    return kInf;
  return std::exp(c0);
}

double kernel_log_density(const MeijerKernel& k, double x)
{
  if (std::isnan(x) || x < 0.0)
    throw DomainError("kernel_density: x must be >= 0");
  KernelForm f = KernelForm::from(k);
  if (x == 0.0)
    return std::log(f.at_zero());
  if (std::isinf(x))
    return -kInf;
  return f.log_density_at_log(std::log(x));
}

double kernel_density(const MeijerKernel& k, double x)
{
  return std::exp(kernel_log_density(k, x));
}

double kernel_cv(const MeijerKernel& k)
{
  validate(k);
  auto [a1, a2] = fisher_shapes(k);
  double xi = k.shape.xi;
  double log_ratio = 0.0;
  if (!std::isinf(a1))
    log_ratio += log_gamma_ratio(a1, 2.0 * xi) - 2.0 * log_gamma_ratio(a1, xi);
  if (!std::isinf(a2)) {
    if (!(a2 > 2.0 * xi))
      throw MomentError("kernel_cv: second moment does not exist (need xi > 2 gamma^2 sin^2 theta)");
    log_ratio += log_gamma_ratio(a2, -2.0 * xi) - 2.0 * log_gamma_ratio(a2, -xi);
  }
  return std::sqrt(std::expm1(log_ratio));
}

MeijerKernel per_obs_params(double eta, double x_k, const KernelShape& shape)
{
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw DomainError("per_obs_params: eta must be positive and finite");
  if (!(x_k > 0.0) || !std::isfinite(x_k))
    throw DomainError("per_obs_params: observation must be positive and finite");
  validate(shape);
  MeijerKernel k;
  k.shape = shape;
  k.gamma = eta / std::sqrt(eta * eta + x_k);
  k.nu = 1.0 + 0.5 * k.gamma * k.gamma * (1.0 + std::cos(2.0 * shape.theta) / shape.xi);
  return k;
}

} // namespace mmkde
