#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace concordia {

enum class ErrorCode {
  DivisionByZero,
  Overflow,
  RingMismatch,
  ZeroElement,
  ValueGroupMismatch,
  DegenerateBaseChange,
  NotReducedValid,
  UnknownExample,
  MissingParameter,
  NotAChainMap,
  NotInvertible,
  InvalidComplex,
  UnsupportedPresentation,
  RankNotOne,
  CycleInTorsion,
  NonIntegral,
  MissingSignature,
  NotNonorientableValid,
  DirectionMismatch,
  UnknownKnot,
  GroebnerDegreeCap,
  IntegrityError,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every module. The CLI prints `name()` on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace concordia
