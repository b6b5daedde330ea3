#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cocert {

enum class ErrorKind {
  DivisionByZero,
  CharacteristicMismatch,
  DimensionMismatch,
  VariableMismatch,
  WrongCharacteristic,
  InfiniteDimensional,
  HypothesisViolation,
  NotFano,
  NotCritical,
  CostGuardExceeded,
  ObstructedMassey,
  IncompleteCritSearch,
  Parse,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::CostGuardExceeded: return "CostGuardExceeded";
    case ErrorKind::ObstructedMassey: return "ObstructedMassey";
    case ErrorKind::IncompleteCritSearch: return "IncompleteCritSearch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace cocert
