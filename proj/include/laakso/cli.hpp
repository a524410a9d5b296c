// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laakso::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 usage or I/O error,
/// 2 failed mathematical check (including certificate verification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace laakso::cli
