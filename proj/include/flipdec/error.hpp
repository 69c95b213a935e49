#pragma once

#include <stdexcept>
#include <string>

namespace flipdec {

/// Caller passed arguments that violate a precondition (bad dimensions,
/// malformed spec string, out-of-range parameter).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// A decoder or constructor refused to run because a configured resource
/// limit would be exceeded (e.g. soft-ML with k too large). Distinct from
/// InvalidArgument so the CLI can map it to its own exit code.
class LimitRefusal : public std::runtime_error {
 public:
  explicit LimitRefusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flipdec
