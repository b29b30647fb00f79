#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithmirror {

enum class ErrorKind {
  NonIntegralDual,
  OriginNotInterior,
  ParseError,
  ValidationError,
  UnsupportedDimension,
  EmptyDualFace,
  NotPrime,
  OrderTooLarge,
  DivisionByZero,
  TorsionUnsupported,
  NonExactDivision,
  InsufficientSeries,
  WrongOrder,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can emit it as JSON without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arithmirror
