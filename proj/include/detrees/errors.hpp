#pragma once

#include <stdexcept>
#include <string>

namespace detrees {

// A variable or monomial lies outside the ring or order it is used with.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation was called with arguments violating its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or invalid input data (problem specs, polynomial text, tableau files).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Index-set closure failed while building a relation family. Carries the
// offending pair so it can be reported verbatim.
class ClosureViolation : public std::logic_error {
 public:
  ClosureViolation(const std::string& what, std::string witness)
      : std::logic_error(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace detrees
