#include "mmkde/estimator.hpp"

#include "mmkde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace mmkde {

namespace {

std::vector<std::string> shape_warnings(const KernelShape& shape, const FitOptions& options)
{
  std::vector<std::string> out;
  double c2 = std::cos(shape.theta) * std::cos(shape.theta);
  double s2 = std::sin(shape.theta) * std::sin(shape.theta);
  if (options.tail_index) {
    double beta = *options.tail_index;
    if (c2 > 0.0 && !(shape.xi / c2 > 0.25 - beta / 2.0)) {
      std::ostringstream os;
      os << "kernel tail too light for tail index " << beta << ": xi/cos^2(theta) = "
         << shape.xi / c2 << " <= " << 0.25 - beta / 2.0;
      out.push_back(os.str());
    }
  }
  if (options.head_index) {
    double alpha = *options.head_index;
    if (s2 > 0.0 && !(shape.xi / s2 > 1.0 - alpha)) {
      std::ostringstream os;
      os << "kernel head too light for head index " << alpha << ": xi/sin^2(theta) = "
         << shape.xi / s2 << " <= " << 1.0 - alpha;
      out.push_back(os.str());
    }
  }
  return out;
}

} // namespace

MMEstimator::MMEstimator(std::shared_ptr<const Sample> sample, KernelShape shape, double eta,
                         const FitOptions& options)
  : sample_(std::move(sample))
  , shape_(shape)
  , eta_(eta)
{
  if (!sample_)
    throw DomainError("fit: missing sample");
  if (!std::isfinite(eta) || !(eta > 0.0))
    throw DomainError("fit: eta must be positive and finite");
  validate(shape_);
  const auto& xs = sample_->values();
  const auto& logs = sample_->logs();
  kernels_.reserve(xs.size());
  forms_.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    MeijerKernel kern = per_obs_params(eta_, xs[k], shape_);
    KernelForm f = KernelForm::from(kern);
    f.c0 -= logs[k];
    f.log_nu += logs[k];
    kernels_.push_back(kern);
    forms_.push_back(f);
  }
  warnings_ = shape_warnings(shape_, options);
}

double MMEstimator::operator()(double x) const
{
  if (std::isnan(x) || x < 0.0)
    throw DomainError("evaluate: x must be >= 0");
  CompensatedSum acc;
  if (x == 0.0) {
    for (const auto& f : forms_) {
      double v = f.at_zero();
      if (std::isinf(v))
        return std::numeric_limits<double>::infinity();
      acc.add(v);
    }
  } else {
    double lx = std::log(x);
    for (const auto& f : forms_)
      acc.add(std::exp(f.log_density_at_log(lx)));
  }
  return acc.value() / static_cast<double>(forms_.size());
}

MMEstimator fit(std::shared_ptr<const Sample> s, const KernelShape& shape, double eta,
                const FitOptions& options)
{
  return MMEstimator(std::move(s), shape, eta, options);
}

MMEstimator fit(const Sample& s, const KernelShape& shape, double eta, const FitOptions& options)
{
  return MMEstimator(std::make_shared<const Sample>(s), shape, eta, options);
}

double evaluate(const MMEstimator& m, double x)
{
  return m(x);
}

std::vector<double> evaluate_grid(const MMEstimator& m, const std::vector<double>& xs,
                                  unsigned workers)
{
  std::vector<double> ys(xs.size());
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      ys[i] = m(xs[i]);
  };
  if (workers <= 1 || xs.size() < 2 * static_cast<std::size_t>(workers)) {
    run(0, xs.size());
    return ys;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t chunk = (xs.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::min(xs.size(), w * chunk);
    std::size_t hi = std::min(xs.size(), lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        run(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return ys;
}

double evaluate_basic(const Sample& s, const MeijerKernel& k, double x)
{
  if (std::isnan(x) || x < 0.0)
    throw DomainError("evaluate_basic: x must be >= 0");
  KernelForm f = KernelForm::from(k);
  CompensatedSum acc;
  const auto& logs = s.logs();
  if (x == 0.0) {
    double v = f.at_zero();
    if (std::isinf(v))
      return v;
    for (double l : logs)
      acc.add(v * std::exp(-l));
  } else {
    double lx = std::log(x);
    for (double l : logs)
      acc.add(std::exp(f.log_density_at_log(lx - l) - l));
  }
  return acc.value() / static_cast<double>(s.n());
}

} // namespace mmkde
