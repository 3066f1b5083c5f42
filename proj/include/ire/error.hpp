#pragma once

#include <stdexcept>
#include <string>

namespace ire {

enum class ErrorCode {
  DuplicateLabel,
  NotABijection,
  UnknownLabel,
  NotAnIET,
  MalformedTwoRow,
  ParseError,
  NotInEndpointSpace,
  NotInLengthSpace,
  MissingAnchor,
  DuplicateAnchor,
  StepNotApplicable,
  NotInImage,
  TieDetected,
  DegenerateCycle,
  NotPositive,
  ExplicitBranchOutOfRange,
  PointOutsideInterval,
  InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ire
