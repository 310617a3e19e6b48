#include "mmkde/catalog.hpp"

#include "mmkde/errors.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace mmkde {

namespace {

using Params = std::vector<double>;
using Builder = std::function<MeijerKernel(const Params&)>;

struct Row
{
  std::size_t arity;
  Builder build;
};

constexpr double kHalfPi = std::numbers::pi / 2;

MeijerKernel make(double nu, double gamma, double xi, double theta)
{
  return MeijerKernel{nu, gamma, KernelShape{xi, theta}};
}

const std::map<std::string, Row>& rows()
{
  static const std::map<std::string, Row> table = {
    {"betaprime", {2, [](const Params& p) {
       double a = p[0], b = p[1];
       return make(a / b, std::sqrt(1 / a + 1 / b), 1, std::atan(std::sqrt(a / b)));
     }}},
    {"burr", {2, [](const Params& p) {
       double c = p[0], k = p[1];
       return make(std::pow(k, -1 / c), std::sqrt(1 + 1 / k) / c, 1 / c,
                   std::atan(std::sqrt(1 / k)));
     }}},
    {"chi", {1, [](const Params& p) {
       double k = p[0];
       return make(std::sqrt(k), 1 / std::sqrt(2 * k), 0.5, 0);
     }}},
    {"chi2", {1, [](const Params& p) {
       double k = p[0];
       return make(k, std::sqrt(2 / k), 1, 0);
     }}},
    {"dagum", {3, [](const Params& p) {
       double a = p[0], b = p[1], q = p[2];
       return make(b * std::pow(q, 1 / a), std::sqrt(1 + 1 / q) / a, 1 / a,
                   std::atan(std::sqrt(q)));
     }}},
    {"erlang", {2, [](const Params& p) {
       double mu = p[0], k = p[1];
       return make(mu * k, std::sqrt(1 / k), 1, 0);
     }}},
    {"fisher", {2, [](const Params& p) {
       double d1 = p[0], d2 = p[1];
       return make(1, std::sqrt(2 / d1 + 2 / d2), 1, std::atan(std::sqrt(d1 / d2)));
     }}},
    {"frechet", {2, [](const Params& p) {
       double alpha = p[0], s = p[1];
       return make(s, 1 / alpha, 1 / alpha, kHalfPi);
     }}},
    {"gamma", {2, [](const Params& p) {
       double alpha = p[0], beta = p[1];
       return make(alpha / beta, std::sqrt(1 / alpha), 1, 0);
     }}},
    {"gpd", {2, [](const Params& p) {
       double sigma = p[0], zeta = p[1];
       return make(sigma, std::sqrt(zeta + 1), 1, std::atan(std::sqrt(zeta)));
     }}},
    {"invgamma", {2, [](const Params& p) {
       double alpha = p[0], beta = p[1];
       return make(beta / alpha, std::sqrt(1 / alpha), 1, kHalfPi);
     }}},
    {"levy", {1, [](const Params& p) {
       return make(p[0], std::numbers::sqrt2, 1, kHalfPi);
     }}},
    {"loglogistic", {2, [](const Params& p) {
       double a = p[0], b = p[1];
       return make(a, std::numbers::sqrt2 / b, 1 / b, std::numbers::pi / 4);
     }}},
    {"maxwell", {1, [](const Params& p) {
       return make(std::sqrt(3.0) * p[0], 1 / std::sqrt(6.0), 0.5, 0);
     }}},
    {"nakagami", {2, [](const Params& p) {
       double m = p[0], omega = p[1];
       return make(std::sqrt(omega), 1 / (2 * std::sqrt(m)), 0.5, 0);
     }}},
    {"rayleigh", {1, [](const Params& p) {
       return make(std::numbers::sqrt2 * p[0], 0.5, 0.5, 0);
     }}},
    {"singhmaddala", {3, [](const Params& p) {
       double a = p[0], b = p[1], q = p[2];
       return make(b * std::pow(q, -1 / a), std::sqrt(1 + 1 / q) / a, 1 / a,
                   std::atan(std::sqrt(1 / q)));
     }}},
    {"stacy", {3, [](const Params& p) {
       double a = p[0], d = p[1], q = p[2];
       return make(a * std::pow(d / q, 1 / q), std::sqrt(q / d) / q, 1 / q, 0);
     }}},
    {"weibull", {2, [](const Params& p) {
       double mu = p[0], k = p[1];
       return make(mu, 1 / k, 1 / k, 0);
     }}},
  };
  return table;
}

const std::map<std::string, std::pair<std::string, std::function<Params(const Params&)>>>&
aliases()
{
  static const std::map<std::string, std::pair<std::string, std::function<Params(const Params&)>>>
    table = {
      {"exp", {"gamma", [](const Params& p) { return Params{1.0, p[0]}; }}},
      {"exponential", {"gamma", [](const Params& p) { return Params{1.0, p[0]}; }}},
      {"chisquared", {"chi2", [](const Params& p) { return p; }}},
      // 1/X for X ~ Weibull(mu, k) is Frechet(k, 1/mu)
      {"invweibull", {"frechet", [](const Params& p) { return Params{p[1], 1.0 / p[0]}; }}},
      {"generalizedpareto", {"gpd", [](const Params& p) { return p; }}},
    };
  return table;
}

std::size_t alias_arity(const std::string& key)
{
  if (key == "exp" || key == "exponential")
    return 1;
  if (key == "invweibull")
    return 2;
  return rows().at(aliases().at(key).first).arity;
}

} // namespace

std::string normalize_name(const std::string& name)
{
  std::string out;
  for (char ch : name) {
    if (ch == '-' || ch == '_' || ch == ' ')
      continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

MeijerKernel catalog_params(const std::string& name, const std::vector<double>& params)
{
  std::string key = normalize_name(name);
  std::string row_key = key;
  Params p = params;
  std::size_t arity = 0;
  if (auto a = aliases().find(key); a != aliases().end()) {
    arity = alias_arity(key);
    row_key = a->second.first;
  } else if (auto r = rows().find(key); r != rows().end()) {
    arity = r->second.arity;
  } else {
    throw LookupError("unknown distribution '" + name + "'");
  }
  if (params.size() != arity)
    throw DomainError("distribution '" + name + "' expects " + std::to_string(arity) +
                      " parameter(s), got " + std::to_string(params.size()));
  for (double v : params)
    if (!std::isfinite(v) || !(v > 0.0))
      throw DomainError("distribution '" + name + "': parameters must be positive and finite");
  if (row_key != key)
    p = aliases().at(key).second(params);
  MeijerKernel k = rows().at(row_key).build(p);
  validate(k);
  return k;
}

std::vector<std::string> catalog_names()
{
  std::vector<std::string> out;
  for (const auto& [name, row] : rows())
    out.push_back(name);
  return out;
}

} // namespace mmkde
