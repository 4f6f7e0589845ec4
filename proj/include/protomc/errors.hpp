#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace protomc {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a net, sync, or property file. Positions are 1-based.
struct ParseError : Error {
  std::size_t line;
  std::size_t column;

  ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

/// Reachability exploration hit the state cap.
struct ExplosionError : Error {
  std::size_t limit;
  std::size_t frontier;

  ExplosionError(std::size_t limit_, std::size_t frontier_)
      : Error("state explosion: more than " + std::to_string(limit_) +
              " reachable markings (frontier size " + std::to_string(frontier_) + ")"),
        limit(limit_),
        frontier(frontier_) {}
};

/// The model is too large for the path-enumeration oracle.
struct OracleBoundError : Error {
  OracleBoundError(std::size_t states, std::size_t bound)
      : Error("model has " + std::to_string(states) +
              " states, above the oracle bound of " + std::to_string(bound)) {}
};

}  // namespace protomc
