#include "cyclicdd/error.hpp"

namespace cyclicdd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidSubfield: return "InvalidSubfield";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NonBinaryResult: return "NonBinaryResult";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::InvalidGeometry: return "InvalidGeometry";
    case ErrorKind::DualTooLarge: return "DualTooLarge";
    case ErrorKind::EmptyParityMatrix: return "EmptyParityMatrix";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cyclicdd
