#pragma once

#include <stdexcept>
#include <string>

namespace bern {

enum class ErrorCode {
  InvalidArgument = 1,
  NotInteger,
  BracketFailure,
  ToleranceFailure,
  PreconditionViolated,
  OrderMismatch,
  BoundViolation,
  SandwichViolation,
  IdentityViolation,
  PrecisionUnreachable,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace bern
