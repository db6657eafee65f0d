#include "cyclicdd/gf2_poly.hpp"

#include <cctype>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

Gf2Poly::Gf2Poly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c &= 1u;
  trim();
}

void Gf2Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Gf2Poly Gf2Poly::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) fail(ErrorKind::ParseError, "empty hex polynomial");
  std::vector<std::uint8_t> coeffs;
  coeffs.reserve(hex.size() * 4);
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else {
      fail(ErrorKind::ParseError, "invalid hex digit '" + std::string(1, *it) + "'");
    }
    for (unsigned b = 0; b < 4; ++b) coeffs.push_back(static_cast<std::uint8_t>((nibble >> b) & 1u));
  }
  return Gf2Poly(std::move(coeffs));
}

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  std::vector<std::uint8_t> c(degree + 1, 0);
  c.back() = 1;
  return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::x_n_minus_one(std::size_t n) {
  std::vector<std::uint8_t> c(n + 1, 0);
  c.front() = 1;
  c.back() = 1;
  return Gf2Poly(std::move(c));
}

std::string Gf2Poly::to_hex() const {
  if (coeffs_.empty()) return "0x0";
  std::string digits;
  for (std::size_t base = 0; base < coeffs_.size(); base += 4) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) nibble |= static_cast<unsigned>(coeff(base + b)) << b;
    digits.push_back("0123456789ABCDEF"[nibble]);
  }
  return "0x" + std::string(digits.rbegin(), digits.rend());
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<std::uint8_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] ^= other.coeffs_[j];
  }
  return Gf2Poly(std::move(out));
}

Gf2Poly Gf2Poly::operator%(const Gf2Poly& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  auto rem = coeffs_;
  const auto dd = static_cast<std::size_t>(divisor.degree());
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (!rem[i]) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] ^= divisor.coeffs_[j];
  }
  return Gf2Poly(std::move(rem));
}

FieldElement Gf2Poly::evaluate(const Field& field, FieldElement x) const {
  FieldElement acc = field.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field.mul(acc, x);
    if (*it) acc = Field::add(acc, field.one());
  }
  return acc;
}

}  // namespace cyclicdd
