#include "commgraph/error.hpp"

namespace commgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonBijectiveGenerator: return "NonBijectiveGenerator";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ClosureLimitExceeded: return "ClosureLimitExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadQ: return "BadQ";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderValidationFailed: return "OrderValidationFailed";
    case ErrorCode::DuplicateID: return "DuplicateID";
    case ErrorCode::IncompleteCoverage: return "IncompleteCoverage";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace commgraph
