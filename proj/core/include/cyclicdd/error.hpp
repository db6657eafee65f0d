#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclicdd {

enum class ErrorKind {
  InvalidArgument,
  NonPrimitivePolynomial,
  DivisionByZero,
  InvalidSubfield,
  NotADivisor,
  NonBinaryResult,
  DimensionTooLarge,
  ZeroDirection,
  InvalidGeometry,
  DualTooLarge,
  EmptyParityMatrix,
  RankDeficient,
  ConfigError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit code) can branch on the class of error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cyclicdd
