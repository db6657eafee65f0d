#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicdd/gf2m.hpp"

namespace cyclicdd {

/// Polynomial over GF(2). Coefficient i is the coefficient of x^i; the hex
/// form uses the same convention (bit i of the integer).
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::vector<std::uint8_t> coeffs);

  static Gf2Poly from_hex(std::string_view hex);
  static Gf2Poly monomial(std::size_t degree);
  /// x^n - 1 (= x^n + 1 over GF(2)).
  static Gf2Poly x_n_minus_one(std::size_t n);

  [[nodiscard]] std::string to_hex() const;
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] std::uint8_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  [[nodiscard]] const std::vector<std::uint8_t>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] Gf2Poly operator*(const Gf2Poly& other) const;
  [[nodiscard]] Gf2Poly operator%(const Gf2Poly& divisor) const;
  [[nodiscard]] bool divides(const Gf2Poly& other) const { return (other % *this).is_zero(); }

  /// Horner evaluation at a field element.
  [[nodiscard]] FieldElement evaluate(const Field& field, FieldElement x) const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim();
  std::vector<std::uint8_t> coeffs_;
};

}  // namespace cyclicdd
