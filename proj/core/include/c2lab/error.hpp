#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace c2lab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on an argument does not hold (bad vertex, wrong valency, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires " + std::to_string(required) + ", budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// The input to a control-vertex search or swap did not have the structure
/// that a legal edge bipartition guarantees.
class StructuralViolation : public Error {
 public:
  using Error::Error;
};

/// A mathematically guaranteed property failed; indicates a bug in this library.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace c2lab
