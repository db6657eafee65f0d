#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/gf2m.hpp"

namespace cyclicdd {

enum class ParityProvenance { File, EgLines, DualOrbit, Dense };

std::string_view to_string(ParityProvenance p) noexcept;

/// Sparse parity-check matrix stored as per-row and per-column index lists.
class SparseParityMatrix {
 public:
  SparseParityMatrix() = default;
  /// Row index lists are sorted and deduplicated; throws on out-of-range columns.
  SparseParityMatrix(std::size_t cols, std::vector<std::vector<std::uint32_t>> rows, ParityProvenance provenance);

  static SparseParityMatrix from_dense(const BinaryMatrix& dense, ParityProvenance provenance);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_.size(); }
  [[nodiscard]] std::size_t edges() const noexcept { return edges_; }
  [[nodiscard]] ParityProvenance provenance() const noexcept { return provenance_; }
  [[nodiscard]] std::span<const std::uint32_t> row(std::size_t r) const noexcept { return rows_[r]; }
  [[nodiscard]] std::span<const std::uint32_t> column(std::size_t c) const noexcept { return cols_[c]; }

  [[nodiscard]] std::vector<std::size_t> row_weights() const;
  [[nodiscard]] std::vector<std::size_t> column_weights() const;
  [[nodiscard]] BinaryMatrix to_dense() const;

  /// Every row has even overlap with every row of `generator`.
  [[nodiscard]] bool orthogonal_to(const BinaryMatrix& generator) const;
  [[nodiscard]] bool syndrome_zero(std::span<const std::uint8_t> word) const;

 private:
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
  std::size_t edges_ = 0;
  ParityProvenance provenance_ = ParityProvenance::Dense;
};

/// Line incidence matrix of EG(mu, 2^s) with points identified with GF(2^m),
/// m = mu * s: one row per line {a + t b : t in GF(2^s)}, b != 0.
/// Throws InvalidGeometry unless mu * s == m.
SparseParityMatrix eg_line_parity_matrix(unsigned mu, unsigned s, const Field& field);

inline constexpr std::size_t kMaxDualOrbitDimension = 30;

/// All dual codewords of weight <= max_row_weight, found by enumerating the
/// dual code. Throws DualTooLarge (dual dimension > 30) or EmptyParityMatrix.
SparseParityMatrix dual_orbit_parity_matrix(const BinaryMatrix& generator, unsigned max_row_weight);

/// Smallest w such that the dual codewords of weight <= w span the dual code.
SparseParityMatrix dual_orbit_parity_matrix_full_rank(const BinaryMatrix& generator);

// alist interchange format (1-based indices, zero padding tolerated on input).
SparseParityMatrix read_alist(std::istream& in);
void write_alist(std::ostream& out, const SparseParityMatrix& h);
SparseParityMatrix load_alist(const std::filesystem::path& path);
void save_alist(const std::filesystem::path& path, const SparseParityMatrix& h);

}  // namespace cyclicdd
