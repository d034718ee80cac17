#ifndef TOROIDAL_ERRORS_HPP
#define TOROIDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toroidal {

enum class ErrorCode {
  MixedDimensions,
  NotASubgroup,
  VariableMismatch,
  TruncationMismatch,
  NotAUnit,
  ConstantNotOne,
  DivergentSubstitution,
  UnrepresentableConstant,
  MalformedInput,
  Indeterminate,
  NotPrepared,
  UnsupportedCase,
  ChartMismatch,
  ConstraintViolated,
  NotABForm,
  GeneratorExhausted,
  BoxTooSmall,
  BadScenario,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ConstantNotOne: return "ConstantNotOne";
    case ErrorCode::DivergentSubstitution: return "DivergentSubstitution";
    case ErrorCode::UnrepresentableConstant: return "UnrepresentableConstant";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::NotPrepared: return "NotPrepared";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NotABForm: return "NotABForm";
    case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
    case ErrorCode::BoxTooSmall: return "BoxTooSmall";
    case ErrorCode::BadScenario: return "BadScenario";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace toroidal

#endif
