#pragma once

#include <stdexcept>
#include <string>

namespace permulex {

/// Process exit codes used by the CLI. Library errors map onto these.
enum class ExitCode : int {
  Ok = 0,
  Validation = 2,
  Rejected = 3,
  VerificationFailed = 4,
  ArithmeticExhausted = 5,
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what, ExitCode code)
      : std::runtime_error(what), kind_(std::move(kind)), code_(code) {}

  /// Short machine-readable reason, e.g. "not-primitive".
  const std::string& kind() const noexcept { return kind_; }
  ExitCode code() const noexcept { return code_; }

 private:
  std::string kind_;
  ExitCode code_;
};

#define PERMULEX_DEFINE_ERROR(Name, kind, code)                         \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(kind, what, code) {} \
  }

PERMULEX_DEFINE_ERROR(NonExtensible, "non-extensible", ExitCode::Validation);
PERMULEX_DEFINE_ERROR(ComparisonExhausted, "comparison-exhausted", ExitCode::ArithmeticExhausted);
PERMULEX_DEFINE_ERROR(UnresolvableComparison, "unresolvable-comparison", ExitCode::ArithmeticExhausted);
PERMULEX_DEFINE_ERROR(NotPrimitive, "not-primitive", ExitCode::Rejected);
PERMULEX_DEFINE_ERROR(NotMonotone, "not-monotone", ExitCode::Rejected);
PERMULEX_DEFINE_ERROR(NotSeparable, "inseparable", ExitCode::Rejected);
PERMULEX_DEFINE_ERROR(PeriodicWord, "periodic", ExitCode::Rejected);
PERMULEX_DEFINE_ERROR(TypeMissing, "type-missing", ExitCode::Rejected);
PERMULEX_DEFINE_ERROR(DuplicateValue, "duplicate-value", ExitCode::VerificationFailed);
PERMULEX_DEFINE_ERROR(FactorAbsent, "factor-absent", ExitCode::Validation);
PERMULEX_DEFINE_ERROR(ParseError, "parse-error", ExitCode::Validation);
PERMULEX_DEFINE_ERROR(ValidationError, "validation-error", ExitCode::Validation);

#undef PERMULEX_DEFINE_ERROR

}  // namespace permulex
