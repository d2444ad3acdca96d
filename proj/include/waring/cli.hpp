#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace waring::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; `in` backs the "-" file argument.
///
///   rank <monomial>
///   decompose <monomial> [--method binary|a0eq1|squares|general-grid] [--seed S]
///   verify <decomposition.json | ->
///   hermite-count <system.json | - | inline JSON>
///   table --max-degree D --max-vars V [--certify]
///
/// Every verb accepts --json (default) or --text.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace waring::cli
