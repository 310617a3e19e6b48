#include "mmkde/simlab.hpp"

#include "mmkde/baselines.hpp"
#include "mmkde/errors.hpp"
#include "mmkde/estimator.hpp"
#include "mmkde/quadrature.hpp"
#include "mmkde/selector.hpp"
#include "mmkde/specfun.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

namespace mmkde {

namespace {

TestDensity gamma_density(int id, std::string name, double shape, double rate)
{
  boost::math::gamma_distribution<double> d(shape, 1.0 / rate);
  return {id,
          std::move(name),
          [d](double x) { return x <= 0.0 ? 0.0 : boost::math::pdf(d, x); },
          [d](double x) { return x <= 0.0 ? 0.0 : boost::math::cdf(d, x); },
          [shape, rate](Rng& r) { return r.gamma(shape, rate); },
          [d](double p) { return boost::math::quantile(d, p); }};
}

TestDensity lognormal_density(int id, std::string name, double mu, double sigma)
{
  boost::math::lognormal_distribution<double> d(mu, sigma);
  return {id,
          std::move(name),
          [d](double x) { return x <= 0.0 ? 0.0 : boost::math::pdf(d, x); },
          [d](double x) { return x <= 0.0 ? 0.0 : boost::math::cdf(d, x); },
          [mu, sigma](Rng& r) { return std::exp(mu + sigma * r.normal()); },
          [d](double p) { return boost::math::quantile(d, p); }};
}

// Two-component mixture; quantile by bisection on the CDF.
TestDensity mixture(int id, std::string name, double w, const TestDensity& a,
                    const TestDensity& b)
{
  auto pdf = [w, fa = a.pdf, fb = b.pdf](double x) { return w * fa(x) + (1 - w) * fb(x); };
  auto cdf = [w, fa = a.cdf, fb = b.cdf](double x) { return w * fa(x) + (1 - w) * fb(x); };
  auto sampler = [w, sa = a.sampler, sb = b.sampler](Rng& r) {
    return r.uniform() < w ? sa(r) : sb(r);
  };
  auto quantile = [cdf, qa = a.quantile, qb = b.quantile](double p) {
    double lo = std::min(qa(p), qb(p));
    double hi = std::max(qa(p), qb(p));
    for (int i = 0; i < 400 && hi - lo > 1e-10 * std::max(1.0, hi); ++i) {
      double mid = 0.5 * (lo + hi);
      (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  return {id, std::move(name), pdf, cdf, sampler, quantile};
}

std::vector<TestDensity> build_registry()
{
  std::vector<TestDensity> r;
  r.push_back(lognormal_density(1, "lognormal(0,1)", 0.0, 1.0));

  boost::math::chi_squared_distribution<double> chi1(1.0);
  r.push_back({2, "chi2(1)",
               [chi1](double x) { return x <= 0.0 ? 0.0 : boost::math::pdf(chi1, x); },
               [chi1](double x) { return x <= 0.0 ? 0.0 : boost::math::cdf(chi1, x); },
               [](Rng& g) {
                 double z = g.normal();
                 return z * z;
               },
               [chi1](double p) { return boost::math::quantile(chi1, p); }});

  {
    double m = 1.0, omega = 2.0;
    double lc = std::numbers::ln2 + m * std::log(m) - log_gamma(m) - m * std::log(omega);
    boost::math::gamma_distribution<double> sq(m, omega / m);
    r.push_back({3, "nakagami(1,2)",
                 [=](double x) {
                   return x <= 0.0 ? 0.0
                                   : std::exp(lc + (2 * m - 1) * std::log(x) - m * x * x / omega);
                 },
                 [=](double x) { return x <= 0.0 ? 0.0 : boost::math::gamma_p(m, m * x * x / omega); },
                 [=](Rng& g) { return std::sqrt(g.gamma(m, m / omega)); },
                 [sq](double p) { return std::sqrt(boost::math::quantile(sq, p)); }});
  }

  r.push_back(gamma_density(4, "gamma(2,1/2)", 2.0, 0.5));
  r.push_back(gamma_density(5, "gamma(0.7,1/2)", 0.7, 0.5));
  r.push_back({6, "exp(1)", [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); },
               [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); },
               [](Rng& g) { return -std::log(g.uniform()); },
               [](double p) { return -std::log1p(-p); }});

  {
    double sigma = 2.0 / 3.0, zeta = 2.0 / 3.0;
    r.push_back({7, "gpd(2/3,2/3)",
                 [=](double x) {
                   return x < 0.0 ? 0.0 : std::pow(1 + zeta * x / sigma, -1 / zeta - 1) / sigma;
                 },
                 [=](double x) {
                   return x <= 0.0 ? 0.0 : 1 - std::pow(1 + zeta * x / sigma, -1 / zeta);
                 },
                 [=](Rng& g) { return sigma / zeta * std::expm1(-zeta * std::log(g.uniform())); },
                 [=](double p) { return sigma / zeta * std::expm1(-zeta * std::log1p(-p)); }});
  }

  r.push_back({8, "invweibull(1,2)",
               [](double x) { return x <= 0.0 ? 0.0 : 2.0 * std::exp(-1.0 / (x * x)) / (x * x * x); },
               [](double x) { return x <= 0.0 ? 0.0 : std::exp(-1.0 / (x * x)); },
               [](Rng& g) { return 1.0 / std::sqrt(-std::log(g.uniform())); },
               [](double p) { return 1.0 / std::sqrt(-std::log(p)); }});

  r.push_back(mixture(9, "2/3 gamma(0.7,1/2) + 1/3 gamma(20,5)", 2.0 / 3.0,
                      gamma_density(0, "", 0.7, 0.5), gamma_density(0, "", 20.0, 5.0)));
  r.push_back(mixture(10, "2/3 lognormal(0,1) + 1/3 lognormal(1.5,0.1)", 2.0 / 3.0,
                      lognormal_density(0, "", 0.0, 1.0),
                      lognormal_density(0, "", 1.5, std::sqrt(0.1))));

  for (const auto& d : r) {
    std::vector<double> bps;
    for (double p : {1e-4, 1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999})
      bps.push_back(d.quantile(p));
    double mass = integrate_half_line(d.pdf, bps);
    if (std::abs(mass - 1.0) > 1e-8)
      throw Error("density registry: density " + std::to_string(d.id) +
                  " does not integrate to one");
  }
  return r;
}

double parse_number(const std::string& text, const std::string& what)
{
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ParseError("invalid " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t replicate_stream(int density_id, std::size_t r)
{
  return (static_cast<std::uint64_t>(density_id) << 40) ^ static_cast<std::uint64_t>(r);
}

} // namespace

const std::vector<TestDensity>& density_registry()
{
  static const std::vector<TestDensity> registry = build_registry();
  return registry;
}

const TestDensity& test_density(int id)
{
  const auto& reg = density_registry();
  if (id < 1 || id > static_cast<int>(reg.size()))
    throw LookupError("unknown test density " + std::to_string(id));
  return reg[static_cast<std::size_t>(id - 1)];
}

double parse_theta(const std::string& token)
{
  if (token == "0")
    return 0.0;
  if (token == "pi/4")
    return std::numbers::pi / 4;
  if (token == "pi/2")
    return std::numbers::pi / 2;
  double v = parse_number(token, "theta");
  if (v < 0.0 || v > std::numbers::pi / 2 + kThetaBranchTol)
    throw DomainError("theta must lie in [0, pi/2], got " + token);
  return std::min(v, std::numbers::pi / 2);
}

EstimatorSpec parse_estimator(const std::string& label)
{
  EstimatorSpec spec;
  spec.label = label;
  if (label == "gamma-mod") {
    spec.kind = EstimatorKind::gamma_modified;
    return spec;
  }
  if (label == "gamma") {
    spec.kind = EstimatorKind::gamma_original;
    return spec;
  }
  if (label == "lognormal") {
    spec.kind = EstimatorKind::lognormal;
    return spec;
  }
  if (label == "oracle") {
    spec.kind = EstimatorKind::oracle;
    return spec;
  }
  auto parts = split(label, ':');
  if (parts.size() != 4 || parts[0] != "mm")
    throw LookupError("unknown estimator label '" + label + "'");
  spec.shape.xi = parse_number(parts[1], "xi");
  spec.shape.theta = parse_theta(parts[2]);
  validate(spec.shape);
  const std::string& tail = parts[3];
  if (tail.rfind("eta", 0) == 0) {
    spec.kind = EstimatorKind::mm_fixed;
    spec.eta = parse_number(tail.substr(3), "eta");
    if (!(spec.eta > 0.0))
      throw DomainError("estimator '" + label + "': eta must be positive");
  } else if (tail.rfind("c", 0) == 0) {
    spec.kind = EstimatorKind::mm_plugin;
    spec.c = parse_number(tail.substr(1), "c");
    SelectorConfig{spec.c}.validate();
  } else {
    throw LookupError("estimator '" + label + "': last field must be c<value> or eta<value>");
  }
  return spec;
}

std::vector<double> estimate_on_grid(const EstimatorSpec& spec, const TestDensity& truth,
                                     const Sample& s, const std::vector<double>& xs)
{
  std::vector<double> ys(xs.size());
  switch (spec.kind) {
  case EstimatorKind::mm_plugin:
  case EstimatorKind::mm_fixed: {
    double eta = spec.eta;
    if (spec.kind == EstimatorKind::mm_plugin) {
      SelectorConfig cfg;
      cfg.c = spec.c;
      eta = plugin_eta(s, cfg);
    }
    return evaluate_grid(fit(s, spec.shape, eta), xs);
  }
  case EstimatorKind::gamma_modified:
  case EstimatorKind::gamma_original: {
    double b = gamma_reference_bandwidth(s);
    bool modified = spec.kind == EstimatorKind::gamma_modified;
    for (std::size_t i = 0; i < xs.size(); ++i)
      ys[i] = gamma_kernel_kde(s, b, xs[i], modified);
    return ys;
  }
  case EstimatorKind::lognormal: {
    double h = lognormal_reference_bandwidth(s);
    for (std::size_t i = 0; i < xs.size(); ++i)
      ys[i] = lognormal_kde(s, h, xs[i]);
    return ys;
  }
  case EstimatorKind::oracle:
    for (std::size_t i = 0; i < xs.size(); ++i)
      ys[i] = truth.pdf(xs[i]);
    return ys;
  }
  return ys;
}

std::vector<double> mise_grid(const TestDensity& d)
{
  constexpr std::size_t kN = 1000;
  double q = d.quantile(0.9999);
  std::vector<double> xs(kN);
  for (std::size_t i = 0; i < kN; ++i)
    xs[i] = static_cast<double>(i + 1) * q / static_cast<double>(kN);
  return xs;
}

BenchResult mise(int density_id, const EstimatorSpec& spec, const BenchOptions& opt)
{
  if (opt.n < 10)
    throw DomainError("mise: n must be at least 10");
  if (opt.M < 1)
    throw DomainError("mise: M must be at least 1");
  const TestDensity& d = test_density(density_id);
  std::vector<double> xs = mise_grid(d);
  std::vector<double> truth(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    truth[i] = d.pdf(xs[i]);

  std::vector<double> ise(opt.M, 0.0);
  std::vector<char> failed(opt.M, 0);
  auto run = [&](std::size_t r) {
    Rng rng(opt.seed, replicate_stream(density_id, r));
    std::vector<double> draws(opt.n);
    for (double& v : draws)
      v = d.sampler(rng);
    try {
      Sample s(std::move(draws));
      std::vector<double> est = estimate_on_grid(spec, d, s, xs);
      CompensatedSum acc;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = est[i] - truth[i];
        acc.add(e * e);
      }
      ise[r] = acc.value() / static_cast<double>(xs.size());
      if (!std::isfinite(ise[r]))
        failed[r] = 1;
    } catch (const DegenerateError&) {
      failed[r] = 1;
    } catch (const DomainError&) {
      failed[r] = 1;
    }
  };

  unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    for (std::size_t r = 0; r < opt.M; ++r)
      run(r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < opt.M; r += workers)
            run(r);
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
  }

  BenchResult out;
  out.density_id = density_id;
  out.estimator_label = spec.label;
  out.n = opt.n;
  out.M = opt.M;
  out.seed = opt.seed;
  for (std::size_t r = 0; r < opt.M; ++r) {
    if (failed[r])
      out.failed_replicates.push_back(r);
    else
      out.per_replicate_ise.push_back(ise[r]);
  }
  if (static_cast<double>(out.failed_replicates.size()) > 0.05 * static_cast<double>(opt.M))
    throw Error("mise: " + std::to_string(out.failed_replicates.size()) + " of " +
                std::to_string(opt.M) + " replicates failed for density " +
                std::to_string(density_id) + ", estimator " + spec.label);
  if (out.per_replicate_ise.empty())
    throw Error("mise: no successful replicate");
  out.mise = compensated_sum(out.per_replicate_ise) /
             static_cast<double>(out.per_replicate_ise.size());
  return out;
}

BenchTable bench_table(const std::vector<EstimatorSpec>& specs, const std::vector<int>& densities,
                       const BenchOptions& opt, const std::optional<std::string>& baseline)
{
  if (specs.empty() || densities.empty())
    throw DomainError("bench_table: estimator and density lists must be non-empty");
  std::size_t base_index = specs.size();
  if (baseline) {
    for (std::size_t j = 0; j < specs.size(); ++j)
      if (specs[j].label == *baseline)
        base_index = j;
    if (base_index == specs.size())
      throw LookupError("relative baseline '" + *baseline + "' is not among the estimators");
  }
  for (int id : densities)
    test_density(id);
  BenchTable t;
  t.baseline = baseline;
  for (int id : densities) {
    std::size_t first = t.results.size();
    for (const auto& spec : specs)
      t.results.push_back(mise(id, spec, opt));
    if (baseline) {
      double base = t.results[first + base_index].mise;
      for (std::size_t j = 0; j < specs.size(); ++j)
        t.relative.push_back(j == base_index ? 1.0 : t.results[first + j].mise / base);
    }
  }
  return t;
}

void write_bench_csv(std::ostream& os, const BenchTable& t)
{
  auto old = os.precision(17);
  os << "density,estimator,n,M,mise";
  if (t.baseline)
    os << ",relative";
  os << '\n';
  for (std::size_t i = 0; i < t.results.size(); ++i) {
    const auto& r = t.results[i];
    os << r.density_id << ',' << r.estimator_label << ',' << r.n << ',' << r.M << ',' << r.mise;
    if (t.baseline)
      os << ',' << t.relative[i];
    os << '\n';
  }
  os.precision(old);
}

void write_bench_pretty(std::ostream& os, const BenchTable& t)
{
  std::vector<int> ids;
  std::vector<std::string> labels;
  std::map<std::pair<std::string, int>, double> cell;
  for (std::size_t i = 0; i < t.results.size(); ++i) {
    const auto& r = t.results[i];
    if (std::find(ids.begin(), ids.end(), r.density_id) == ids.end())
      ids.push_back(r.density_id);
    if (std::find(labels.begin(), labels.end(), r.estimator_label) == labels.end())
      labels.push_back(r.estimator_label);
    cell[{r.estimator_label, r.density_id}] = t.baseline ? t.relative[i] : r.mise * 1e4;
  }
  std::size_t width = 12;
  for (const auto& l : labels)
    width = std::max(width, l.size() + 2);
  os << (t.baseline ? "relative MISE vs " + *t.baseline : std::string("MISE x 1e4")) << '\n';
  os << std::left << std::setw(static_cast<int>(width)) << "estimator" << std::right;
  for (int id : ids)
    os << std::setw(11) << ("Dens " + std::to_string(id));
  os << '\n';
  for (const auto& l : labels) {
    os << std::left << std::setw(static_cast<int>(width)) << l << std::right;
    for (int id : ids)
      os << std::setw(11) << std::fixed << std::setprecision(4) << cell[{l, id}];
    os << '\n';
  }
  os << std::defaultfloat;
}

} // namespace mmkde
