#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superalg {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  NotAQuadraticExtension,
  FactorizationTooHard,
  InvalidField,
  InvalidAlgebra,
  ParentMismatch,
  NotHomogeneous,
  UnsupportedCenterFactorization,
  UnsupportedDimension,
  NotMinimal,
  NotCSS,
  NotOddType,
  NotSplitEven,
  ZeroParameter,
  EmptyShape,
  ZeroCoefficient,
  TooLarge,
  NotBijective,
  NotInvertible,
  NotInner,
  Degenerate,
  DimMismatch,
  NotEvenCSS,
  NotAntiautomorphism,
  NoSuperantiautomorphism,
  NonSquareInvariant,
  UnsupportedField,
  NotOverQuadraticExtension,
  NotSemilinearAntiauto,
  UnsupportedA0,
  UnsupportedShape,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace superalg
