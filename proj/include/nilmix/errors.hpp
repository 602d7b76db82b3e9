#pragma once

#include <stdexcept>
#include <string>

namespace nilmix {

/// Malformed or out-of-range user input (bad rank, invalid partition, parse errors).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the domain where it is defined.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A static record or catalog entry was not found.
class LookupFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but the library has no method for it.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilmix
