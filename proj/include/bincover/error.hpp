#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bincover {

enum class ErrorCode {
  InvalidArgument,
  InvalidItem,
  ParseError,
  MultisetMismatch,
  MalformedTrace,
  InstanceTooLarge,
  EpsTooLarge,
  NotSubMultiset,
  BadEps,
  BadP,
  BadParams,
  ClaimMismatch,
  BudgetExceeded,
  OutOfInterval,
  NotIrreducible,
  NoBorder,
  BoundaryB,
  PrecisionLoss,
  MissingProvenance,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies the
/// failure class so callers (and tests) can branch without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace bincover
