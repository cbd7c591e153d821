#pragma once

#include <stdexcept>
#include <string>

namespace curves {

// Malformed user input: words, surface descriptions, point records.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Surface outside the supported family (closed surfaces with chi <= 0),
// or an operation that needs a different kind of surface.
class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating point configuration too close to degenerate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curves
