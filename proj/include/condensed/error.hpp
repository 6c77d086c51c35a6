#pragma once

#include <stdexcept>
#include <string>

namespace condensed {

enum class ErrorCode {
  DuplicateLabel,
  NotTotal,
  ValueOutsideCodomain,
  NonComposable,
  CodomainMismatch,
  NotParallel,
  SizeBoundExceeded,
  NonPrincipalPoint,
  NotAnIso,
  NotIso,
  NotEpi,
  ConeDoesNotCommute,
  BoundViolation,
  FunctorLawViolation,
  ForkLawViolation,
  StarRequired,
  TimesRequired,
  BaseMismatch,
  ParseError,
  InvalidAlgebra,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace condensed
