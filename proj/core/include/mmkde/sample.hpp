#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mmkde {

//! Immutable vector of strictly positive, finite observations with their
//! logarithms cached at construction.
class Sample
{
public:
  //! Throws DomainError naming the first offending index, or when fewer than
  //! `min_size` values are given (2 by default).
  explicit Sample(std::vector<double> values, std::size_t min_size = 2);

  std::size_t n() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& logs() const { return logs_; }
  double min() const { return min_; }
  double max() const { return max_; }

  //! New sample with every value multiplied by s > 0.
  Sample scaled(double s) const;

private:
  std::vector<double> values_;
  std::vector<double> logs_;
  double min_ = 0.0;
  double max_ = 0.0;
};

//! Evaluation grid and values; the exchange format for estimates and truths.
struct DensityGrid
{
  std::vector<double> xs;
  std::vector<double> ys;

  //! Throws DomainError unless xs is strictly increasing and positive, sizes
  //! match, and ys is non-negative (ys[0] may be +inf).
  void validate() const;
};

//! `count` equally spaced points from lo to hi inclusive (count >= 2, 0 < lo < hi).
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

//! Neumaier-compensated sum.
double compensated_sum(std::span<const double> xs);

//! Running Neumaier accumulator.
class CompensatedSum
{
public:
  void add(double v)
  {
    double t = sum_ + v;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

} // namespace mmkde
