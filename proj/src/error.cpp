#include "flowshop/error.hpp"

namespace flowshop {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidPrefix: return "InvalidPrefix";
    case ErrorKind::SingleMachine: return "SingleMachine";
    case ErrorKind::NotTwoMachines: return "NotTwoMachines";
    case ErrorKind::TooFewMachines: return "TooFewMachines";
    case ErrorKind::InvalidJobs: return "InvalidJobs";
    case ErrorKind::DuplicateJob: return "DuplicateJob";
    case ErrorKind::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::WrongRowCount: return "WrongRowCount";
    case ErrorKind::WrongColumnCount: return "WrongColumnCount";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::BadRange: return "BadRange";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace flowshop
