#pragma once

// Component soft-decision decoders. LLR sign convention: L > 0 favours bit 0.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/parity_matrix.hpp"

namespace cyclicdd {

using LlrVector = std::vector<double>;

/// Channel and message LLRs are clipped to this magnitude.
inline constexpr double kLlrClip = 30.0;

[[nodiscard]] inline double clip_llr(double x) noexcept {
  return x > kLlrClip ? kLlrClip : (x < -kLlrClip ? -kLlrClip : x);
}

/// 2 atanh(tanh(a/2) tanh(b/2)) in its overflow-free log-domain form.
[[nodiscard]] double boxplus(double a, double b) noexcept;

struct DecodeResult {
  BitVector bits;
  bool converged = false;
  unsigned iterations = 0;
  double flops = 0.0;
};

/// A decoder maps an LLR vector to a hard decision. Implementations are
/// immutable after construction, so one instance may serve many threads.
class SoftDecoder {
 public:
  virtual ~SoftDecoder() = default;
  [[nodiscard]] virtual std::size_t length() const = 0;
  [[nodiscard]] virtual DecodeResult decode(std::span<const double> llr) const = 0;
};

/// Flooding sum-product decoding with the exact tanh rule. Stops as soon as
/// the hard decision satisfies every check; a bit whose posterior is exactly 0
/// is undecided and blocks convergence.
class SpaDecoder final : public SoftDecoder {
 public:
  SpaDecoder(SparseParityMatrix h, unsigned max_iterations);

  [[nodiscard]] std::size_t length() const override { return h_.cols(); }
  [[nodiscard]] DecodeResult decode(std::span<const double> llr) const override;
  [[nodiscard]] const SparseParityMatrix& parity_matrix() const noexcept { return h_; }
  /// Flop estimate for one flooding iteration (6 per edge).
  [[nodiscard]] double flops_per_iteration() const noexcept { return 6.0 * static_cast<double>(h_.edges()); }

 private:
  SparseParityMatrix h_;
  unsigned max_iterations_;
  // Edge e belongs to check row_of_edge_[e]; column-major view indexes edges.
  std::vector<std::uint32_t> edge_col_;
  std::vector<std::size_t> row_start_;
  std::vector<std::vector<std::uint32_t>> col_edges_;
};

/// Number of OSD(order) test patterns: sum_{i <= order} C(k, i).
std::uint64_t osd_candidate_count(std::size_t k, unsigned order);

/// Ordered statistics decoding over a full-rank generator matrix.
class OsdDecoder final : public SoftDecoder {
 public:
  /// Throws RankDeficient if the rows of G are dependent.
  OsdDecoder(BinaryMatrix generator, unsigned order);

  [[nodiscard]] std::size_t length() const override { return g_.cols(); }
  [[nodiscard]] DecodeResult decode(std::span<const double> llr) const override;
  [[nodiscard]] unsigned order() const noexcept { return order_; }
  /// N log2 N for sorting plus (candidates - 1) * (N - k) for re-encoding.
  [[nodiscard]] double flops_per_call() const noexcept;

 private:
  BinaryMatrix g_;
  unsigned order_;
};

/// Exhaustive maximum-likelihood (max-correlation) decoding, k <= 20. Ties go
/// to the smallest message, read as an integer with bit r = coefficient of row r.
class MldDecoder final : public SoftDecoder {
 public:
  explicit MldDecoder(BinaryMatrix generator);

  [[nodiscard]] std::size_t length() const override { return g_.cols(); }
  [[nodiscard]] DecodeResult decode(std::span<const double> llr) const override;

 private:
  BinaryMatrix g_;
  std::vector<std::vector<std::uint32_t>> row_support_;
};

/// sum_i (1 - 2 c_i) L_i
[[nodiscard]] double correlation(std::span<const std::uint8_t> word, std::span<const double> llr) noexcept;

}  // namespace cyclicdd
