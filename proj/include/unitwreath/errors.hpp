#pragma once

#include <stdexcept>
#include <string>

namespace unitwreath {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed presentation text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A relation word breaks the triangular form of a pc presentation.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Collection over the presentation does not define a group of order 2^n.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Algebra elements over different groups were combined.
class GroupMismatchError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// No (a, b) pair satisfies the witness invariants.
class NoWitnessError : public Error {
 public:
  using Error::Error;
};

// An internal step of the construction produced a result contradicting its
// own invariants (closed-form mismatch, vanishing sub-product, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A closure grew beyond the configured element cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace unitwreath
