#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace probid {

enum class ErrorKind {
  SumNotOne,
  NonpositiveMass,
  ZeroDenominator,
  BadSymbol,
  BadTerm,
  IndexOutOfRange,
  BadStart,
  ZeroMassPrefix,
  NotErgodic,
  SingularSystem,
  EmptyHistory,
  UnknownState,
  EmptyInput,
  ConfigInvalid,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags.
/// For ConfigInvalid the message is the offending field path.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace probid
