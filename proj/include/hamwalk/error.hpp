#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamwalk {

enum class ErrorKind {
  NotAGroup,
  OrderCapExceeded,
  EmptyGenSet,
  NotNormal,
  NotGenerating,
  NotAbelian,
  NotNilpotent,
  NotPrimePower,
  StructureNotPxA,
  ValenceTooLarge,
  CosetConditionViolated,
  PreconditionFailed,
  EmptyWalk,
  NoPivotFound,
  SpliceVerificationFailed,
  ProviderFailed,
  InternalInvariantViolation,
  BadPrime,
  UnsupportedByPaper,
  InvalidArgument,
  FormatError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind, so callers (the CLI,
// the harness) can classify rejections without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hamwalk
