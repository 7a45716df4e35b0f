#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowshop {

enum class ErrorKind {
  // model
  EmptyMatrix,
  RaggedRows,
  NegativeTime,
  InvalidPermutation,
  InvalidPrefix,
  // heuristics
  SingleMachine,
  NotTwoMachines,
  TooFewMachines,
  InvalidJobs,
  DuplicateJob,
  UnknownAlgorithm,
  // oracle
  TooLarge,
  // io
  BadHeader,
  WrongRowCount,
  WrongColumnCount,
  NonInteger,
  BadRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception. Text parsing
// errors carry a 1-based line/column; other errors leave them at 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0,
        std::size_t column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace flowshop
