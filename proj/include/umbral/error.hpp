#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

enum class ErrorKind {
  ZeroPsiValue,
  InvalidQ,
  OutOfRange,
  CapExceeded,
  GridDomainTooSmall,
  NonIntegerGridArg,
  UnknownIdentity,
  UnknownAxiom,
  QOutOfRange,
  SingularBasis,
  SyntaxError,
  NegativeExponent,
  MixedPsiContext,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long detail = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  /// Kind-specific integer payload: the failing n for ZeroPsiValue, the
  /// 1-based column for parse errors, -1 otherwise.
  long detail() const { return detail_; }

 private:
  ErrorKind kind_;
  long detail_;
};

}  // namespace umbral
