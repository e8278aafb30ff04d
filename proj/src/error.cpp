#include "flux/error.hpp"

namespace flux {

std::string Span::to_string() const {
  if (!known()) return "?";
  return std::to_string(line) + ":" + std::to_string(column);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::UndeclaredTypeVar: return "UndeclaredTypeVar";
    case ErrorKind::UnguardedTypeVar: return "UnguardedTypeVar";
    case ErrorKind::UnresolvedFlexVar: return "UnresolvedFlexVar";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ConditionNotBool: return "ConditionNotBool";
    case ErrorKind::StrEqNonString: return "StrEqNonString";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::UnboundProcedure: return "UnboundProcedure";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::SubtypeFailure: return "SubtypeFailure";
    case ErrorKind::UnknownProcedure: return "UnknownProcedure";
    case ErrorKind::DomainOverlap: return "DomainOverlap";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::PathTypeError: return "PathTypeError";
    case ErrorKind::NonAtomicSimpleUpdate: return "NonAtomicSimpleUpdate";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TransformDisabled: return "TransformDisabled";
  }
  return "Error";
}

ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::Io:
    case ErrorKind::TransformDisabled:
      return ErrorClass::Syntax;
    case ErrorKind::ConditionNotBool:
    case ErrorKind::StrEqNonString:
    case ErrorKind::Stuck:
    case ErrorKind::UnboundProcedure:
    case ErrorKind::FuelExhausted:
    case ErrorKind::UnboundVariable:
      return ErrorClass::Runtime;
    default:
      return ErrorClass::Type;
  }
}

Error::Error(ErrorKind kind, std::string message, Span span)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      span_(span),
      message_(std::move(message)) {}

}  // namespace flux
