#include "arithmirror/error.hpp"

namespace arithmirror {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegralDual: return "NonIntegralDual";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::EmptyDualFace: return "EmptyDualFace";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TorsionUnsupported: return "TorsionUnsupported";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::InsufficientSeries: return "InsufficientSeries";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace arithmirror
