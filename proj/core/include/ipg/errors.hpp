#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipg {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

// A value does not fit into the array's word width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class BudgetViolation : public Error {
 public:
  BudgetViolation(std::size_t peak, std::size_t budget)
      : Error("register budget exceeded: peak " + std::to_string(peak) +
              " words, budget " + std::to_string(budget)),
        peak_(peak),
        budget_(budget) {}

  std::size_t peak() const noexcept { return peak_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t peak_;
  std::size_t budget_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The array is not in the representation an operation requires.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

// A cell holds a value outside every band the algorithms may produce.
class CorruptionError : public Error {
 public:
  CorruptionError(const std::string& what, std::size_t index)
      : Error(what + " at index " + std::to_string(index)), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace ipg
