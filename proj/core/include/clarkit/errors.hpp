#pragma once

#include <stdexcept>
#include <string>

namespace clarkit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation: bad k, malformed tree, out-of-range id, ...
class InvalidArgumentError : public Error {
  using Error::Error;
};

// A spec that cannot describe a catacondensed benzenoid.
class InvalidSpecError : public Error {
  using Error::Error;
};

// Operation requires a catacondensed graph (tree-shaped dualist).
class NotCatacondensedError : public Error {
  using Error::Error;
};

// Input exceeds a configured enumeration cap.
class ResourceLimitError : public Error {
  using Error::Error;
};

// No perfect matching where one is required.
class InfeasibleError : public Error {
  using Error::Error;
};

}  // namespace clarkit
