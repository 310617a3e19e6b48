#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmkde::cli {

//! Runs the command line `args` (args[0] is the program name). Diagnostics go
//! to `err`. Returns 0 only when every requested file was written; 2 for
//! usage errors, 1 for everything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

//! "# mmkde <version> <args...>" without the program name and without
//! execution-only flags (--workers), which do not change any output.
std::string provenance(const std::vector<std::string>& args);

} // namespace mmkde::cli
