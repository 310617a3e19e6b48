#pragma once

#include <cstdint>
#include <random>

namespace mmkde {

//! Seedable generator with independent streams: Rng(seed, i) and Rng(seed, j)
//! are decorrelated for i != j. Wraps std::mt19937_64 seeded through
//! splitmix64 mixing of (seed, stream).
class Rng
{
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }
  //! Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  //! Gamma with the given shape and rate (Marsaglia-Tsang).
  double gamma(double shape, double rate);

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

//! One splitmix64 step.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace mmkde
