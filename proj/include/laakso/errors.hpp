// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>

namespace laakso {

/// Thrown when a request exceeds a configured resource bound (level cap,
/// all-pairs memory budget, exact-cover work limit used as a hard limit).
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation violates a mathematical postcondition that the
/// construction guarantees (gap bound exceeded, norm identity broken,
/// separation failure). Reaching this indicates a bug, a tampered input,
/// or a genuinely falsified claim; the CLI maps it to exit code 2.
class math_check_error : public std::runtime_error {
 public:
  explicit math_check_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laakso
