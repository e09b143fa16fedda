#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cherednik {

/// Parameters violate a standing assumption (bad m, p, n, relation, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured cap.
class SizeCapError : public std::runtime_error {
 public:
  SizeCapError(const std::string& what, std::size_t required, std::size_t cap)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           ", cap is " + std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// Division by zero in an exact field.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// An identity that must hold exactly did not. Always an implementation bug
/// or a non-generic parameter choice, never a rounding issue.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The sampled parameters landed on a non-generic locus (e.g. the singular
/// space has the wrong dimension).
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cherednik
