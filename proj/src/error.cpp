#include "singkit/error.hpp"

namespace singkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotMonic: return "NotMonic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonGerm: return "NonGerm";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotArtinian: return "NotArtinian";
    case Errc::SubstitutionDiverged: return "SubstitutionDiverged";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegenerateLambda: return "DegenerateLambda";
    case Errc::BasisNotIndependent: return "BasisNotIndependent";
    case Errc::BasisWrongSize: return "BasisWrongSize";
    case Errc::NotASubseries: return "NotASubseries";
    case Errc::ParabolicBase: return "ParabolicBase";
    case Errc::SymmetricException: return "SymmetricException";
    case Errc::UnsupportedRootDegree: return "UnsupportedRootDegree";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAmbient: return "NotAmbient";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::SyntaxError,
            (line ? "line " + std::to_string(line) + ", " : std::string()) + "column " +
                std::to_string(column) + ": " + message),
      reason_(message),
      line_(line),
      column_(column) {}

}  // namespace singkit
