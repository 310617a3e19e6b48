#include "cli.hpp"

#include "mmkde/mmkde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace mmkde::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FitArgs
{
  std::string input;
  std::string output;
  double xi = 1.0;
  std::string theta = "pi/4";
  std::optional<double> eta;
  double c = 1.5;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::size_t grid_count = 512;
  double omega_max = 500.0;
  double step = 0.005;
  std::string format = "csv";
  unsigned workers = 1;
};

struct MellinArgs
{
  std::string input;
  std::string output;
  double c = 0.5;
  double omega_max = 200.0;
  double step = 0.01;
  std::string analytic;
  std::string format = "csv";
};

struct BenchArgs
{
  std::string output;
  std::string densities = "1,2,3,4,5,6,7,8,9,10";
  std::string estimators;
  std::size_t n = 100;
  std::size_t M = 100;
  std::uint64_t seed = 1;
  std::string relative;
  std::string format = "csv";
  unsigned workers = 1;
};

std::vector<std::string> split_list(const std::string& s)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

double quantile_type7(std::vector<double> xs, double p)
{
  std::sort(xs.begin(), xs.end());
  double h = (static_cast<double>(xs.size()) - 1.0) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (h - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

// Writes the main artifact and, when given, a sidecar; on any failure both
// are removed so no partial output survives.
void write_outputs(const std::string& path, const std::function<void(std::ostream&)>& body,
                   const std::string& sidecar = {},
                   const std::function<void(std::ostream&)>& sidecar_body = {})
{
  write_file_atomic(path, body);
  if (sidecar.empty())
    return;
  try {
    write_file_atomic(sidecar, sidecar_body);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    throw;
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed)
{
  for (const char* a : allowed)
    if (format == a)
      return;
  throw DomainError("unsupported --format '" + format + "'");
}

void cmd_fit(const FitArgs& a, const std::string& header)
{
  check_format(a.format, {"csv", "json"});
  if (a.grid_count < 2)
    throw DomainError("--grid-count must be at least 2");
  KernelShape shape{a.xi, parse_theta(a.theta)};
  validate(shape);
  auto sample = std::make_shared<const Sample>(read_sample_csv_file(a.input));

  std::optional<SelectorResult> sel;
  double eta = 0.0;
  if (a.eta) {
    eta = *a.eta;
  } else {
    SelectorConfig cfg;
    cfg.c = a.c;
    cfg.omega_max = a.omega_max;
    cfg.omega_step = a.step;
    sel = plugin_select(*sample, cfg);
    eta = sel->eta;
  }
  MMEstimator est = fit(sample, shape, eta);

  double lo = a.grid_min.value_or(sample->min() / 100.0);
  double hi = a.grid_max.value_or(quantile_type7(sample->values(), 0.999));
  std::vector<double> xs = linear_grid(lo, hi, a.grid_count);
  std::vector<double> ys = evaluate_grid(est, xs, a.workers);

  auto body = [&](std::ostream& os) {
    if (a.format == "csv") {
      os << header << '\n' << "x,y\n";
      for (std::size_t i = 0; i < xs.size(); ++i)
        os << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
    } else {
      Json j;
      j["provenance"] = header.substr(2);
      j["x"] = xs;
      j["y"] = ys;
      os << j.dump(1) << '\n';
    }
  };
  auto meta = [&](std::ostream& os) {
    Json j;
    j["provenance"] = header.substr(2);
    j["eta"] = eta;
    j["xi"] = shape.xi;
    j["theta"] = shape.theta;
    j["c"] = sel ? Json(a.c) : Json(nullptr);
    j["n"] = sample->n();
    j["selector"] = sel ? "plugin" : "manual";
    j["T0"] = sel ? Json(sel->t0) : Json(nullptr);
    j["warnings"] = est.warnings();
    os << j.dump(1) << '\n';
  };
  write_outputs(a.output, body, a.output + ".meta.json", meta);
}

void cmd_mellin(const MellinArgs& a, const std::string& header)
{
  check_format(a.format, {"csv", "json"});
  Sample sample(read_sample_csv_file(a.input));
  MellinLine line = mellin_line(sample, a.c, a.omega_max, a.step);
  std::optional<MellinLine> exact;
  if (!a.analytic.empty()) {
    auto colon = a.analytic.find(':');
    std::string name = a.analytic.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string::npos)
      for (const auto& tok : split_list(a.analytic.substr(colon + 1))) {
        std::size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size())
          throw ParseError("--analytic: cannot parse parameter '" + tok + "'");
        params.push_back(v);
      }
    exact = analytic_line(name, params, a.c, a.omega_max, a.step);
  }
  auto body = [&](std::ostream& os) {
    if (a.format == "csv") {
      os << header << '\n' << "omega,re,im,abs" << (exact ? ",analytic_abs" : "") << '\n';
      for (std::size_t i = 0; i < line.omegas.size(); ++i) {
        const Complex& v = line.values[i];
        os << format_double(line.omegas[i]) << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << ',' << format_double(std::abs(v));
        if (exact)
          os << ',' << format_double(std::abs(exact->values[i]));
        os << '\n';
      }
    } else {
      Json j;
      j["provenance"] = header.substr(2);
      j["c"] = line.c;
      j["omega"] = line.omegas;
      std::vector<double> re, im, ab, an;
      for (std::size_t i = 0; i < line.values.size(); ++i) {
        re.push_back(line.values[i].real());
        im.push_back(line.values[i].imag());
        ab.push_back(std::abs(line.values[i]));
        if (exact)
          an.push_back(std::abs(exact->values[i]));
      }
      j["re"] = re;
      j["im"] = im;
      j["abs"] = ab;
      if (exact)
        j["analytic_abs"] = an;
      os << j.dump(1) << '\n';
    }
  };
  write_outputs(a.output, body);
}

void cmd_bench(const BenchArgs& a, const std::string& header)
{
  check_format(a.format, {"csv", "pretty", "json"});
  std::vector<EstimatorSpec> specs;
  for (const auto& label : split_list(a.estimators))
    specs.push_back(parse_estimator(label));
  if (specs.empty())
    throw DomainError("--estimators must list at least one estimator");
  std::vector<int> ids;
  for (const auto& tok : split_list(a.densities)) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw LookupError("unknown density '" + tok + "'");
    test_density(id);
    ids.push_back(id);
  }
  std::optional<std::string> baseline;
  if (!a.relative.empty())
    baseline = a.relative;
  BenchOptions opt;
  opt.n = a.n;
  opt.M = a.M;
  opt.seed = a.seed;
  opt.workers = a.workers;
  BenchTable table = bench_table(specs, ids, opt, baseline);
  auto body = [&](std::ostream& os) {
    if (a.format == "csv") {
      os << header << '\n';
      write_bench_csv(os, table);
    } else if (a.format == "pretty") {
      os << header << '\n';
      write_bench_pretty(os, table);
    } else {
      Json j;
      j["provenance"] = header.substr(2);
      Json rows = Json::array();
      for (std::size_t i = 0; i < table.results.size(); ++i) {
        const auto& r = table.results[i];
        Json row;
        row["density"] = r.density_id;
        row["estimator"] = r.estimator_label;
        row["n"] = r.n;
        row["M"] = r.M;
        row["mise"] = r.mise;
        if (baseline)
          row["relative"] = table.relative[i];
        row["failed_replicates"] = r.failed_replicates.size();
        rows.push_back(row);
      }
      j["results"] = rows;
      os << j.dump(1) << '\n';
    }
  };
  write_outputs(a.output, body);
}

} // namespace

std::string provenance(const std::vector<std::string>& args)
{
  std::string out = std::string("# mmkde ") + MMKDE_VERSION;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok == "--workers") {
      ++i;
      continue;
    }
    if (tok.rfind("--workers=", 0) == 0)
      continue;
    out += ' ';
    out += tok;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Mellin-Meijer kernel density estimation on the positive half-line", "mmkde"};
  app.set_version_flag("--version", std::string(MMKDE_VERSION));
  app.require_subcommand(1);

  FitArgs fa;
  auto* fit_cmd = app.add_subcommand("fit", "fit a density to a single-column CSV sample");
  fit_cmd->add_option("--input", fa.input, "input CSV")->required();
  fit_cmd->add_option("--output", fa.output, "output file (a .meta.json sidecar is added)")
    ->required();
  fit_cmd->add_option("--xi", fa.xi, "kernel power parameter")->capture_default_str();
  fit_cmd->add_option("--theta", fa.theta, "kernel angle: radians, 0, pi/4 or pi/2")
    ->capture_default_str();
  auto* eta_opt = fit_cmd->add_option("--eta", fa.eta, "fixed smoothing parameter");
  auto* c_opt = fit_cmd->add_option("--c", fa.c, "plug-in weight exponent")->capture_default_str();
  eta_opt->excludes(c_opt);
  fit_cmd->add_option("--grid-min", fa.grid_min, "first grid point");
  fit_cmd->add_option("--grid-max", fa.grid_max, "last grid point");
  fit_cmd->add_option("--grid-count", fa.grid_count, "number of grid points")
    ->capture_default_str();
  fit_cmd->add_option("--omega-max", fa.omega_max, "selector scan ceiling")
    ->capture_default_str();
  fit_cmd->add_option("--step", fa.step, "selector scan step")->capture_default_str();
  fit_cmd->add_option("--format", fa.format, "csv or json")->capture_default_str();
  fit_cmd->add_option("--workers", fa.workers, "threads for grid evaluation")
    ->capture_default_str();

  MellinArgs ma;
  auto* mellin_cmd = app.add_subcommand("mellin", "empirical Mellin transform along Re z = c");
  mellin_cmd->add_option("--input", ma.input, "input CSV")->required();
  mellin_cmd->add_option("--output", ma.output, "output file")->required();
  mellin_cmd->add_option("--c", ma.c, "real part of the line")->capture_default_str();
  mellin_cmd->add_option("--omega-max", ma.omega_max, "largest omega")->capture_default_str();
  mellin_cmd->add_option("--step", ma.step, "omega spacing")->capture_default_str();
  mellin_cmd->add_option("--analytic", ma.analytic,
                         "add |M(f; c + i omega)| of a named density, e.g. exp:1");
  mellin_cmd->add_option("--format", ma.format, "csv or json")->capture_default_str();

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Monte Carlo MISE on the test densities");
  bench_cmd->add_option("--output", ba.output, "output file")->required();
  bench_cmd->add_option("--densities", ba.densities, "comma-separated density ids (1-10)")
    ->capture_default_str();
  bench_cmd->add_option("--estimators", ba.estimators, "comma-separated estimator labels")
    ->required();
  bench_cmd->add_option("--n", ba.n, "sample size")->capture_default_str();
  bench_cmd->add_option("--M", ba.M, "replications")->capture_default_str();
  bench_cmd->add_option("--seed", ba.seed, "RNG seed")->capture_default_str();
  bench_cmd->add_option("--relative", ba.relative, "baseline label for relative MISE");
  bench_cmd->add_option("--format", ba.format, "csv, pretty or json")->capture_default_str();
  bench_cmd->add_option("--workers", ba.workers, "threads over replicates")
    ->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty())
    rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  std::string header = provenance(args);
  try {
    if (*fit_cmd)
      cmd_fit(fa, header);
    else if (*mellin_cmd)
      cmd_mellin(ma, header);
    else if (*bench_cmd)
      cmd_bench(ba, header);
  } catch (const ParseError& e) {
    err << "mmkde: parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "mmkde: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace mmkde::cli
