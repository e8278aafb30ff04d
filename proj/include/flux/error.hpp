#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flux {

/// Position in a script or data file. Line and column are 1-based; a
/// default-constructed span means "no source location".
struct Span {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  std::string to_string() const;
};

enum class ErrorKind {
  Syntax,
  Io,
  UndeclaredTypeVar,
  UnguardedTypeVar,
  UnresolvedFlexVar,
  UnboundVariable,
  ConditionNotBool,
  StrEqNonString,
  Stuck,
  UnboundProcedure,
  FuelExhausted,
  TypeError,
  ArityError,
  SubtypeFailure,
  UnknownProcedure,
  DomainOverlap,
  DomainMismatch,
  PathTypeError,
  NonAtomicSimpleUpdate,
  UnknownLabel,
  TransformDisabled,
};

std::string_view to_string(ErrorKind kind);

/// Diagnostic class used by the command line front end to pick an exit code.
enum class ErrorClass { Syntax, Type, Runtime };

ErrorClass classify(ErrorKind kind);

/// The single exception type thrown by the library. `expected` and `found`
/// are filled in for type errors where they make sense.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, Span span = {});

  ErrorKind kind() const noexcept { return kind_; }
  const Span& span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

  std::string expected;
  std::string found;
  /// Focus path for runtime errors, e.g. "/0/2".
  std::string focus;
  /// Extra context lines (for example the type environment of a path match).
  std::string context;

  Error& with_span(Span s) {
    if (!span_.known()) span_ = s;
    return *this;
  }

private:
  ErrorKind kind_;
  Span span_;
  std::string message_;
};

}  // namespace flux
