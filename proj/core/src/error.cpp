#include "probid/error.hpp"

namespace probid {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SumNotOne: return "SumNotOne";
    case ErrorKind::NonpositiveMass: return "NonpositiveMass";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::BadTerm: return "BadTerm";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadStart: return "BadStart";
    case ErrorKind::ZeroMassPrefix: return "ZeroMassPrefix";
    case ErrorKind::NotErgodic: return "NotErgodic";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::EmptyHistory: return "EmptyHistory";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace probid
