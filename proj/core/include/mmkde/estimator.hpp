#pragma once

#include "mmkde/meijer.hpp"
#include "mmkde/sample.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mmkde {

//! Moment indices of the target density, when known: E X^-alpha < inf and
//! E X^beta < inf. Used only for the advisory kernel-shape check.
struct FitOptions
{
  std::optional<double> head_index;
  std::optional<double> tail_index;
};

//! Fitted Mellin-Meijer estimator; immutable after fit.
class MMEstimator
{
public:
  MMEstimator(std::shared_ptr<const Sample> sample, KernelShape shape, double eta,
              const FitOptions& options = {});

  const Sample& sample() const { return *sample_; }
  const KernelShape& shape() const { return shape_; }
  double eta() const { return eta_; }
  const std::vector<MeijerKernel>& kernels() const { return kernels_; }
  //! Advisory messages (kernel shape too light for the stated moment indices).
  const std::vector<std::string>& warnings() const { return warnings_; }

  //! n^-1 sum_k X_k^-1 L_k(x / X_k); +inf at 0 when some kernel head diverges.
  double operator()(double x) const;

private:
  std::shared_ptr<const Sample> sample_;
  KernelShape shape_;
  double eta_;
  std::vector<MeijerKernel> kernels_;
  // kernel forms already shifted by log X_k, so term k is exp(form(log x))
  std::vector<KernelForm> forms_;
  std::vector<std::string> warnings_;
};

MMEstimator fit(std::shared_ptr<const Sample> s, const KernelShape& shape, double eta,
                const FitOptions& options = {});
MMEstimator fit(const Sample& s, const KernelShape& shape, double eta,
                const FitOptions& options = {});

double evaluate(const MMEstimator& m, double x);

//! Estimate at every x; `workers` threads split the grid, output order fixed.
std::vector<double> evaluate_grid(const MMEstimator& m, const std::vector<double>& xs,
                                  unsigned workers = 1);

//! n^-1 sum_k X_k^-1 L(x / X_k) with one kernel shared by all observations.
double evaluate_basic(const Sample& s, const MeijerKernel& k, double x);

} // namespace mmkde
