#include "pltower/error.hpp"

namespace pltower {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::InfiniteOperand: return "InfiniteOperand";
    case ErrorKind::AllCoefficientsZero: return "AllCoefficientsZero";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Semantic: return "SemanticError";
    case ErrorKind::LeafCountMismatch: return "LeafCountMismatch";
    case ErrorKind::NotInF: return "NotInF";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::PoleInPiece: return "PoleInPiece";
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::Precondition: return "PreconditionViolated";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message) {
  return std::string(to_string(kind)) + ": " + message;
}

std::string decorate(ErrorKind kind, const std::string& message, SourcePosition where) {
  return std::string(to_string(kind)) + " at line " + std::to_string(where.line) +
         ", column " + std::to_string(where.column) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(decorate(kind, message)), kind_(kind), detail_(message) {}

Error::Error(ErrorKind kind, const std::string& message, SourcePosition where)
    : std::runtime_error(decorate(kind, message, where)), kind_(kind), detail_(message), position_(where) {}

}  // namespace pltower
