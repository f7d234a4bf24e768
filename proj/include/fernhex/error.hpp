#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fernhex {

enum class ErrorKind {
  NonLatticeTransform,
  NonClosingBoundary,
  BadDentCount,
  DentOutOfRange,
  BadDentPositions,
  FernDoesNotFit,
  InstanceTooLarge,
  EngineMismatch,
  NonIntegralResult,
  NegativeArgument,
  PreconditionViolated,
  DivisionByZero,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace fernhex
