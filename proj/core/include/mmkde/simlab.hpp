#pragma once

#include "mmkde/meijer.hpp"
#include "mmkde/rng.hpp"
#include "mmkde/sample.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mmkde {

//! One of the ten simulation targets.
struct TestDensity
{
  int id;
  std::string name;
  std::function<double(double)> pdf;
  std::function<double(double)> cdf;
  std::function<double(Rng&)> sampler;
  std::function<double(double)> quantile;
};

//! The ten test densities, ids 1..10. Each pdf's mass is checked by
//! quadrature the first time the registry is built.
const std::vector<TestDensity>& density_registry();
const TestDensity& test_density(int id);

enum class EstimatorKind
{
  mm_plugin,
  mm_fixed,
  gamma_modified,
  gamma_original,
  lognormal,
  oracle,
};

//! Parsed estimator label:
//!   mm:<xi>:<theta>:c<c>     plug-in eta with weight exponent c
//!   mm:<xi>:<theta>:eta<e>   fixed eta
//!   gamma-mod | gamma | lognormal | oracle
//! theta is radians or one of 0, pi/4, pi/2.
struct EstimatorSpec
{
  std::string label;
  EstimatorKind kind = EstimatorKind::mm_plugin;
  KernelShape shape;
  double c = 1.5;
  double eta = 0.0;
};

EstimatorSpec parse_estimator(const std::string& label);

//! Parses radians or the tokens 0, pi/4, pi/2.
double parse_theta(const std::string& token);

//! Estimate of one replicate on the grid; throws on selector failure.
std::vector<double> estimate_on_grid(const EstimatorSpec& spec, const TestDensity& truth,
                                     const Sample& s, const std::vector<double>& xs);

//! x_i = i q_0.9999 / 1000, i = 1..1000.
std::vector<double> mise_grid(const TestDensity& d);

struct BenchResult
{
  int density_id = 0;
  std::string estimator_label;
  std::size_t n = 0;
  std::size_t M = 0;
  double mise = 0.0;
  std::vector<double> per_replicate_ise;
  std::vector<std::size_t> failed_replicates;
  std::uint64_t seed = 0;
};

struct BenchOptions
{
  std::size_t n = 100;
  std::size_t M = 100;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

//! Monte Carlo MISE. Replicate r draws from Rng(seed, stream(density, r)),
//! so estimators compared under one seed see the same samples. Replicates
//! whose selector fails are recorded; more than 5% failures throws.
BenchResult mise(int density_id, const EstimatorSpec& spec, const BenchOptions& opt);

struct BenchTable
{
  std::vector<BenchResult> results; // density-major, estimators in spec order
  std::optional<std::string> baseline;
  //! mise / baseline mise for the same density (1 for the baseline itself).
  std::vector<double> relative;
};

//! Full factorial run. A baseline label, when given, must be among `specs`.
BenchTable bench_table(const std::vector<EstimatorSpec>& specs, const std::vector<int>& densities,
                       const BenchOptions& opt, const std::optional<std::string>& baseline = {});

//! CSV rows density,estimator,n,M,mise[,relative] (17 significant digits).
void write_bench_csv(std::ostream& os, const BenchTable& t);
//! Wide layout: densities as columns, estimators as rows.
void write_bench_pretty(std::ostream& os, const BenchTable& t);

} // namespace mmkde
