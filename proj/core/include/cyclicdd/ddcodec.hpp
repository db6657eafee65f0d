#pragma once

// Derivative decoding: combine LLR pairs into descendant-code LLRs, decode the
// descendant in every direction, and let each result vote on the original bits.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/code.hpp"
#include "cyclicdd/decoders.hpp"
#include "cyclicdd/gf2m.hpp"

namespace cyclicdd {

/// Output at x is L[x] boxplus L[x + beta]. Throws ZeroDirection.
LlrVector derivative_llr(std::span<const double> llr, FieldElement beta, const Field& field);

/// Output at x is (1 - 2 a_hat[x]) * L[x + beta].
LlrVector get_vote(std::span<const double> llr, std::span<const std::uint8_t> a_hat, FieldElement beta,
                   const Field& field);

/// Nonzero directions, stored as exponents of alpha in ascending order.
class DirectionSet {
 public:
  static DirectionSet all(const Field& field);
  /// k distinct directions drawn uniformly from a generator seeded with `seed`.
  static DirectionSet random(const Field& field, std::size_t k, std::uint64_t seed);
  static DirectionSet from_exponents(const Field& field, std::vector<std::uint32_t> exponents);
  /// "all" or "k:<count>:<seed>".
  static DirectionSet parse(const std::string& text, const Field& field);

  [[nodiscard]] std::size_t size() const noexcept { return exponents_.size(); }
  [[nodiscard]] bool empty() const noexcept { return exponents_.empty(); }
  [[nodiscard]] const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  [[nodiscard]] bool contains_exponent(std::uint32_t e) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

struct DecodeReport {
  BitVector codeword;
  unsigned iterations = 0;
  bool converged = false;
  double flops = 0.0;
  std::uint64_t inner_calls = 0;
  std::uint64_t inner_iterations = 0;
  /// Inner-decoder iterations per direction, in DirectionSet order.
  std::vector<std::uint64_t> direction_iterations;

  [[nodiscard]] double average_inner_iterations() const noexcept {
    return inner_calls ? static_cast<double>(inner_iterations) / static_cast<double>(inner_calls) : 0.0;
  }
};

/// Flops charged per direction and iteration outside the descendant decoder:
/// 4 per position for the pair combination and 1 for the vote.
inline constexpr double kDerivativeFlopsPerPosition = 4.0;
inline constexpr double kVoteFlopsPerPosition = 1.0;

/// Picks the descendant decoder for direction alpha^exponent.
using DescendantDecoderFor = std::function<const SoftDecoder&(std::uint32_t exponent)>;

/// Algorithm based on the cyclic descendant: every direction is decoded by the
/// same decoder. `code` supplies the stopping test H a^T = 0.
DecodeReport dd_decode_cyclic(std::span<const double> llr, const CyclicCode& code, const SoftDecoder& dd_decoder,
                              const DirectionSet& directions, unsigned max_iterations);

/// Same loop with a separate decoder per direction (e.g. minimal descendants).
DecodeReport dd_decode_cyclic(std::span<const double> llr, const CyclicCode& code,
                              const DescendantDecoderFor& decoder_for, const DirectionSet& directions,
                              unsigned max_iterations);

/// Algorithm based on the minimal descendant in direction alpha^0: for each
/// alpha^b in B the LLRs are shifted by b, decoded in direction 1, and the vote
/// is shifted back before averaging.
DecodeReport dd_decode_minimal(std::span<const double> llr, const CyclicCode& code, const SoftDecoder& mdd_decoder,
                               const DirectionSet& directions, unsigned max_iterations);

/// Decodes a pair-constant input of length 2^m through a decoder of the code
/// restricted to a transversal T of the pairs {x, x + beta}: the inner decoder
/// sees L on T and its output is copied to both members of each pair.
class PairFoldedDecoder final : public SoftDecoder {
 public:
  PairFoldedDecoder(std::shared_ptr<const SoftDecoder> inner, const Field& field, FieldElement beta);

  [[nodiscard]] std::size_t length() const override { return partner_.size(); }
  [[nodiscard]] DecodeResult decode(std::span<const double> llr) const override;
  [[nodiscard]] const std::vector<std::uint32_t>& transversal() const noexcept { return transversal_; }

 private:
  std::shared_ptr<const SoftDecoder> inner_;
  std::vector<std::uint32_t> transversal_;
  std::vector<std::uint32_t> partner_;
};

/// Columns of `generator` at pair_transversal(field, beta). For a basis of the
/// minimal descendant in direction beta the result has the same rank.
BinaryMatrix fold_generator(const BinaryMatrix& generator, const Field& field, FieldElement beta);

/// round(avg_iterations * (5 |B| n + |B| omega)).
std::uint64_t flop_account(double avg_iterations, std::uint64_t n, std::uint64_t directions, double omega);

}  // namespace cyclicdd
