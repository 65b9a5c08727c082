#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fractal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would need more codewords than the caller allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(unsigned dimension, std::uint64_t budget)
      : Error("enumeration budget exceeded: 2^" + std::to_string(dimension) +
              " codewords required, budget is " + std::to_string(budget)),
        dimension_(dimension),
        budget_(budget) {}

  unsigned dimension() const noexcept { return dimension_; }
  std::uint64_t budget() const noexcept { return budget_; }

  /// 2^dimension, saturated at UINT64_MAX.
  std::uint64_t required() const noexcept {
    return dimension_ >= 64 ? UINT64_MAX : (std::uint64_t{1} << dimension_);
  }

 private:
  unsigned dimension_;
  std::uint64_t budget_;
};

/// A theorem's hypothesis (acyclic or embedded family) does not hold.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class FamilyError : public Error {
 public:
  using Error::Error;
};

class NotInUnion : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line = 0, std::size_t column = 0)
      : Error(std::move(message)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fractal
