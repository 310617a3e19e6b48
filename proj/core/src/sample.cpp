#include "mmkde/sample.hpp"

#include "mmkde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mmkde {

Sample::Sample(std::vector<double> values, std::size_t min_size)
  : values_(std::move(values))
{
  if (values_.size() < min_size)
    throw DomainError("sample needs at least " + std::to_string(min_size) +
                      " observations, got " + std::to_string(values_.size()));
  logs_.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double v = values_[i];
    if (!std::isfinite(v) || !(v > 0.0))
      throw DomainError("sample value at index " + std::to_string(i) +
                        " is not a positive finite number");
    logs_.push_back(std::log(v));
  }
  auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

Sample Sample::scaled(double s) const
{
  if (!std::isfinite(s) || !(s > 0.0))
    throw DomainError("Sample::scaled: factor must be positive and finite");
  std::vector<double> out(values_);
  for (double& v : out)
    v *= s;
  return Sample(std::move(out), std::min<std::size_t>(values_.size(), 2));
}

void DensityGrid::validate() const
{
  if (xs.size() != ys.size())
    throw DomainError("density grid: xs and ys differ in length");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !std::isfinite(xs[i]))
      throw DomainError("density grid: abscissae must be positive and finite");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw DomainError("density grid: abscissae must be strictly increasing");
    if (std::isnan(ys[i]) || ys[i] < 0.0 || (i > 0 && std::isinf(ys[i])))
      throw DomainError("density grid: values must be non-negative and finite");
  }
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count)
{
  if (count < 2)
    throw DomainError("grid needs at least 2 points");
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw DomainError("grid bounds must satisfy 0 < min < max");
  std::vector<double> xs(count);
  double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = lo + step * static_cast<double>(i);
  xs.back() = hi;
  return xs;
}

double compensated_sum(std::span<const double> xs)
{
  CompensatedSum acc;
  for (double v : xs)
    acc.add(v);
  return acc.value();
}

} // namespace mmkde
