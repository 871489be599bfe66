#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singkit {

enum class Errc {
  NotSquarefree,
  NotMonic,
  DivisionByZero,
  ZeroDivisor,
  SyntaxError,
  UnknownVariable,
  ZeroPolynomial,
  NonGerm,
  OrderMismatch,
  NotArtinian,
  SubstitutionDiverged,
  IndexOutOfRange,
  DegenerateLambda,
  BasisNotIndependent,
  BasisWrongSize,
  NotASubseries,
  ParabolicBase,
  SymmetricException,
  UnsupportedRootDegree,
  BudgetExhausted,
  FieldMismatch,
  NotAmbient,
  UnknownCase,
  InvalidArgument,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

/// Parse failure with a 1-based line/column (line 0 when parsing a bare string).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without position.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace singkit
