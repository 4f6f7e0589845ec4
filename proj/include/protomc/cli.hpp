#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace protomc {

/// Runs one CLI command. Results go to `out`, diagnostics to `err`,
/// `simulate` reads from `in`. Exit codes: 0 success (and, for check, all
/// properties hold), 1 some property fails, 2 usage/parse/validation error,
/// 3 state explosion.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace protomc
