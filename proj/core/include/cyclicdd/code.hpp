#pragma once

// Extended binary cyclic codes of length 2^m described by their
// Mattson-Solomon exponent sets.
//
// Codeword positions follow the field ordering used throughout the library:
// position 0 holds the evaluation at the field zero (the overall parity bit),
// position 1 + i holds the evaluation at alpha^i.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/gf2_poly.hpp"
#include "cyclicdd/gf2m.hpp"

namespace cyclicdd {

/// Subset of [n] = {0, ..., n-1} closed under doubling mod n.
class ExponentSet {
 public:
  ExponentSet() = default;
  /// Throws InvalidArgument if members are out of range or not closed under doubling.
  ExponentSet(std::uint32_t n, std::vector<std::uint32_t> members);

  /// cc(members): smallest conjugacy-closed superset.
  static ExponentSet closure_of(std::uint32_t n, std::span<const std::uint32_t> members);
  static ExponentSet full(std::uint32_t n);

  [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::uint32_t>& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool contains(std::uint32_t j) const noexcept { return j < n_ && in_[j]; }
  [[nodiscard]] std::vector<std::uint32_t> representatives() const;
  /// deg(S): largest binary weight of a member (0 for the empty set).
  [[nodiscard]] unsigned degree() const noexcept;
  [[nodiscard]] bool is_subset_of(const ExponentSet& other) const noexcept;

  friend bool operator==(const ExponentSet& a, const ExponentSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> members_;
  std::vector<bool> in_;
};

/// S_C = {j : g(alpha^-j) != 0}. Throws NotADivisor if g does not divide x^n - 1.
ExponentSet exponent_set_from_generator(const Gf2Poly& gen, const Field& field);
/// g(x) = prod over j outside S of (x - alpha^-j).
Gf2Poly generator_from_exponent_set(const ExponentSet& set, const Field& field);

/// {j : wt(j) <= r}; for r = m this is all of [n].
ExponentSet rm_exponent_set(unsigned r, unsigned m);
/// Narrow-sense BCH code with zeros alpha^1 .. alpha^(delta-1) and their conjugates.
ExponentSet bch_exponent_set(unsigned m, unsigned designed_distance);

struct BchBound {
  unsigned cyclic = 0;    ///< consecutive-zeros bound of the length-n cyclic code
  unsigned extended = 0;  ///< the same bound rounded up to even (overall parity bit)
};
BchBound bch_bound(const ExponentSet& set);

using MsSpectrum = std::vector<FieldElement>;

/// A_j = sum_i a_i alpha^(-ij) for a binary vector of length n.
MsSpectrum ms_transform(std::span<const std::uint8_t> cyclic_part, const Field& field);
/// Evaluates A(z) at alpha^0..alpha^(n-1); with `extended` the result gets the
/// A(0) = A_0 bit prepended. Throws NonBinaryResult if any value is outside GF(2).
BitVector ms_evaluate(std::span<const FieldElement> spectrum, const Field& field, bool extended);

/// [a_(i+b), i in I] with the infinity position fixed.
BitVector cyclic_shift(std::span<const std::uint8_t> word, std::int64_t b);

class CyclicCode {
 public:
  static CyclicCode from_generator(std::shared_ptr<const Field> field, const Gf2Poly& gen);
  static CyclicCode from_exponent_set(std::shared_ptr<const Field> field, ExponentSet set);

  [[nodiscard]] const Field& field() const noexcept { return *field_; }
  [[nodiscard]] const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
  [[nodiscard]] std::size_t length() const noexcept { return field_->size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return exponents_.size(); }
  [[nodiscard]] double rate() const noexcept {
    return static_cast<double>(dimension()) / static_cast<double>(length());
  }
  [[nodiscard]] const ExponentSet& exponents() const noexcept { return exponents_; }
  [[nodiscard]] const Gf2Poly& generator_polynomial() const noexcept { return gen_; }
  /// k x 2^m; row r is the extension of x^r g(x).
  [[nodiscard]] const BinaryMatrix& generator_matrix() const noexcept { return g_; }
  /// (2^m - k) x 2^m basis of the dual code.
  [[nodiscard]] const BinaryMatrix& parity_check_matrix() const noexcept { return h_; }

  /// Spectral membership test: MS spectrum supported on S_C and parity bit = A_0.
  [[nodiscard]] bool is_member(std::span<const std::uint8_t> word) const;
  /// H w^T = 0 via the dense parity-check matrix (fast path for decoders).
  [[nodiscard]] bool satisfies_checks(std::span<const std::uint8_t> word) const;
  [[nodiscard]] BitVector encode(std::span<const std::uint8_t> message) const { return g_.combine_rows(message); }

 private:
  CyclicCode(std::shared_ptr<const Field> field, ExponentSet set, Gf2Poly gen);

  std::shared_ptr<const Field> field_;
  ExponentSet exponents_;
  Gf2Poly gen_;
  BinaryMatrix g_;
  BinaryMatrix h_;
};

inline constexpr std::size_t kMaxExhaustiveDimension = 20;

/// Minimum nonzero weight over the row space of G (k <= 20).
unsigned min_distance_exhaustive(const BinaryMatrix& generator);

}  // namespace cyclicdd
