#pragma once

#include <stdexcept>
#include <string>

namespace flc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (dimension mismatch,
/// malformed window, non-symmetric neighborhood, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Finite data is too small to answer: a radius budget ran out, a sample
/// window does not cover what was asked, or an enumeration box overflowed.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace flc
