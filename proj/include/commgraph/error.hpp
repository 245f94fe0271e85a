#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commgraph {

enum class ErrorCode {
  IndexOutOfRange,
  NonBijectiveGenerator,
  OrderMismatch,
  ClosureLimitExceeded,
  NotASubgroup,
  NotNormal,
  BadParameter,
  UnsupportedParameter,
  SizeCap,
  NotCentral,
  DivisionByZero,
  FieldMismatch,
  BadQ,
  LengthCapExceeded,
  NotFrobenius,
  ParseError,
  OrderValidationFailed,
  DuplicateID,
  IncompleteCoverage,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, tests) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace commgraph
