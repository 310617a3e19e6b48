#pragma once

#include "mmkde/specfun.hpp"

namespace mmkde {

//! Power and head/tail angle shared by every kernel of an estimator.
struct KernelShape
{
  double xi = 1.0;
  double theta = 0.0;
};

//! The Meijer density L_{nu, gamma, xi, theta}.
struct MeijerKernel
{
  double nu = 1.0;
  double gamma = 1.0;
  KernelShape shape;
};

//! Open strip lower < Re(z) < upper; infinite ends are +-inf.
struct HolomorphyStrip
{
  double lower;
  double upper;

  bool contains(double re) const { return lower < re && re < upper; }
};

//! Which closed form a kernel dispatches to.
enum class KernelBranch
{
  gamma,     // theta == 0
  fisher,    // 0 < theta < pi/2
  inv_gamma, // theta == pi/2
};

inline constexpr double kThetaBranchTol = 1e-12;

KernelBranch kernel_branch(const KernelShape& s);

//! Throws DomainError unless xi > 0, theta in [0, pi/2] and all finite.
void validate(const KernelShape& s);
//! Shape check plus nu > 0, gamma > 0.
void validate(const MeijerKernel& k);

//! Shape parameters (a1, a2) of the underlying F(2 a1, 2 a2) variable; a2
//! (resp. a1) is +inf on the Gamma (resp. inverse Gamma) branch.
struct FisherShapes
{
  double a1;
  double a2;
};
FisherShapes fisher_shapes(const MeijerKernel& k);

HolomorphyStrip kernel_strip(const MeijerKernel& k);

//! Strip of the Mellin transform of L^2.
HolomorphyStrip kernel_sq_strip(const MeijerKernel& k);

//! M(L; z). Exactly 1 at z = 1. Throws StripError outside the strip.
Complex kernel_mellin(const MeijerKernel& k, Complex z);

//! log M(L; z) on the analytic branch continued from z = 1.
Complex kernel_log_mellin(const MeijerKernel& k, Complex z);

//! M(L^2; z). Throws StripError outside kernel_sq_strip.
Complex kernel_mellin_sq(const MeijerKernel& k, Complex z);

//! Exponent e such that L(x) ~ const * x^e as x -> 0 (0 on the inverse
//! Gamma branch, whose head vanishes faster than any power).
double head_exponent(const MeijerKernel& k);

double kernel_log_density(const MeijerKernel& k, double x);
double kernel_density(const MeijerKernel& k, double x);

//! Coefficient of variation; throws MomentError unless xi > 2 gamma^2 sin^2 theta.
double kernel_cv(const MeijerKernel& k);

//! Per-observation kernel: gamma = eta / sqrt(eta^2 + x_k),
//! nu = 1 + gamma^2 (1 + cos(2 theta) / xi) / 2.
MeijerKernel per_obs_params(double eta, double x_k, const KernelShape& shape);

//! Precomputed form of log L(x) for repeated evaluation:
//!   fisher:    c0 + p*l - q*softplus(log_r + l/xi)
//!   gamma:     c0 + p*l - q*exp(l/xi)
//!   inv_gamma: c0 + p*l - q*exp(-l/xi)
//! with l = log(x) - log(nu).
struct KernelForm
{
  KernelBranch branch;
  double log_nu;
  double inv_xi;
  double c0;
  double p;
  double q;
  double log_r;

  static KernelForm from(const MeijerKernel& k);

  double log_density_at_log(double log_x) const;
  //! Limit of L(x) as x -> 0+.
  double at_zero() const;
};

} // namespace mmkde
