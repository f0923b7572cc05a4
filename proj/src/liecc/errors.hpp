#pragma once

#include <stdexcept>
#include <string>

namespace liecc {

/// Malformed or out-of-contract user input (bad fraction, Jacobi failure,
/// unknown catalog name, ...). Maps to exit status 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed. Maps to exit status 2.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace liecc
