#include "bernoulli/errors.hpp"

namespace bern {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::ToleranceFailure: return "ToleranceFailure";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::SandwichViolation: return "SandwichViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
  }
  return "Unknown";
}

}  // namespace bern
