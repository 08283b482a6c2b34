#pragma once

#include <stdexcept>
#include <string>

namespace petersch {

// A caller violated an operation's precondition (bad label, non-reduced
// word, unsound window, ...). The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed. Indicates a bug, not bad input.
// The CLI maps this to exit status 3.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace petersch
