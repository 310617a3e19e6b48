#include "mmkde/io.hpp"

#include "mmkde/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace mmkde {

namespace {

std::string trim(const std::string& s)
{
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out)
{
  std::string t = s;
  if (!t.empty() && t.front() == '+')
    t.erase(0, 1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

} // namespace

std::vector<double> read_sample_csv(std::istream& in)
{
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    if (t.find(',') != std::string::npos) {
      // tolerate a trailing separator, nothing else
      std::string head = trim(t.substr(0, t.find(',')));
      std::string rest = trim(t.substr(t.find(',') + 1));
      if (!rest.empty())
        throw ParseError("line " + std::to_string(lineno) + ": expected a single column");
      t = head;
    }
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
      t = t.substr(1, t.size() - 2);
    double v = 0.0;
    if (!parse_double(t, v)) {
      if (!seen_row && values.empty()) {
        seen_row = true; // header
        continue;
      }
      throw ParseError("line " + std::to_string(lineno) + ": cannot parse '" + t +
                       "' as a number");
    }
    seen_row = true;
    if (!std::isfinite(v) || !(v > 0.0))
      throw DomainError("line " + std::to_string(lineno) + ": value " + t +
                        " is not a positive finite number");
    values.push_back(v);
  }
  if (values.empty())
    throw ParseError("input contains no data rows");
  return values;
}

std::vector<double> read_sample_csv_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open input file '" + path + "'");
  try {
    return read_sample_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::string format_double(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& body)
{
  std::string tmp = path + ".tmp";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out)
        throw Error("cannot open '" + tmp + "' for writing");
      body(out);
      out.flush();
      if (!out)
        throw Error("write to '" + tmp + "' failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

} // namespace mmkde
