#pragma once

// Arithmetic in GF(2^m), 2 <= m <= 16, via log/antilog tables.
//
// Elements are stored in vector form: bit i is the coefficient of alpha^i in
// the polynomial basis {1, alpha, ..., alpha^(m-1)}, where alpha is a root of
// the primitive polynomial. Zero has no logarithm; the table entry for it is
// the sentinel kZeroLog.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclicdd {

inline constexpr unsigned kMinFieldDegree = 2;
inline constexpr unsigned kMaxFieldDegree = 16;

/// Conventional primitive polynomial for GF(2^m), bit i = coefficient of x^i.
std::uint32_t default_primitive_polynomial(unsigned m);

struct FieldSpec {
  unsigned m = 0;
  std::uint32_t prim_poly = 0;

  static FieldSpec with_default_polynomial(unsigned m) {
    return FieldSpec{m, default_primitive_polynomial(m)};
  }
};

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t vector_form) : value_(vector_form) {}

  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

/// Immutable log/antilog tables for one field. Safe to share across threads.
class Field {
 public:
  static constexpr std::uint32_t kZeroLog = 0xFFFFFFFFu;

  /// Builds the tables; throws NonPrimitivePolynomial if x does not have
  /// order 2^m - 1 modulo prim_poly.
  explicit Field(FieldSpec spec);

  static Field with_degree(unsigned m) { return Field(FieldSpec::with_default_polynomial(m)); }

  [[nodiscard]] const FieldSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] unsigned m() const noexcept { return spec_.m; }
  /// Number of field elements, 2^m (= extended code length).
  [[nodiscard]] std::uint32_t size() const noexcept { return n_ + 1; }
  /// Multiplicative group order, n = 2^m - 1.
  [[nodiscard]] std::uint32_t n() const noexcept { return n_; }

  [[nodiscard]] FieldElement zero() const noexcept { return FieldElement{0}; }
  [[nodiscard]] FieldElement one() const noexcept { return FieldElement{1}; }
  /// alpha^e for any integer e (reduced mod n).
  [[nodiscard]] FieldElement alpha_pow(std::int64_t e) const noexcept;

  /// Exponent of a nonzero element, kZeroLog for zero.
  [[nodiscard]] std::uint32_t log(FieldElement x) const noexcept { return log_[x.value()]; }
  [[nodiscard]] FieldElement antilog(std::uint32_t e) const noexcept { return FieldElement{antilog_[e]}; }

  [[nodiscard]] static FieldElement add(FieldElement x, FieldElement y) noexcept {
    return FieldElement{x.value() ^ y.value()};
  }
  [[nodiscard]] FieldElement mul(FieldElement x, FieldElement y) const noexcept;
  /// Throws DivisionByZero for x = 0.
  [[nodiscard]] FieldElement inv(FieldElement x) const;
  [[nodiscard]] FieldElement div(FieldElement x, FieldElement y) const;
  /// x^e; 0^0 = 1, 0^e = 0 for e > 0, negative e requires x != 0.
  [[nodiscard]] FieldElement pow(FieldElement x, std::int64_t e) const;

  /// Raw Frobenius sum x + x^2 + ... + x^(2^(ms-1)). Throws InvalidSubfield
  /// unless ms divides m.
  [[nodiscard]] FieldElement trace(FieldElement x, unsigned ms) const;

  /// Elements of the subfield GF(2^s), zero first, then by increasing exponent.
  [[nodiscard]] std::vector<FieldElement> subfield(unsigned s) const;

  // Codeword positions: 0 <-> field zero (the "infinity" slot), 1 + i <-> alpha^i.
  [[nodiscard]] std::size_t position(FieldElement x) const noexcept {
    return x.is_zero() ? 0 : std::size_t{1} + log_[x.value()];
  }
  [[nodiscard]] FieldElement element_at(std::size_t pos) const noexcept {
    return pos == 0 ? zero() : FieldElement{antilog_[pos - 1]};
  }

  /// partner[p] = position of (element_at(p) + beta). An involution without
  /// fixed points for beta != 0.
  [[nodiscard]] std::vector<std::uint32_t> translation_partner(FieldElement beta) const;

 private:
  FieldSpec spec_;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

// Cyclotomic coset machinery modulo n (doubling orbits). Results are sorted.

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n);
/// cc(S): union of the cosets meeting S.
std::vector<std::uint32_t> coset_closure(std::span<const std::uint32_t> set, std::uint32_t n);
/// cr(S): minimal elements of the cosets meeting S.
std::vector<std::uint32_t> coset_representatives(std::span<const std::uint32_t> set, std::uint32_t n);
/// All coset representatives modulo n.
std::vector<std::uint32_t> all_coset_representatives(std::uint32_t n);

}  // namespace cyclicdd
