#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace benchrank::cli {

/// Runs `benchrank <subcommand> ...` and returns the process exit code:
/// 0 success, 2 I/O, 3 format/validation, 4 statistical degeneracy.
/// `args` excludes the program name. Reports go to `out` unless --out is
/// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace benchrank::cli
