#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmkde {

//! Reads a single-column CSV of positive reals. Blank lines and lines
//! starting with '#' are skipped; the first data line may be a header.
//! Throws ParseError (with the 1-based line number) on malformed rows or an
//! empty file, DomainError on a non-positive value.
std::vector<double> read_sample_csv(std::istream& in);
std::vector<double> read_sample_csv_file(const std::string& path);

//! 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

//! Writes through `body` into path + ".tmp", then renames over `path`.
//! The temporary is removed if `body` throws or the stream fails.
void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& body);

} // namespace mmkde
