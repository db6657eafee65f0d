#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclicdd {

/// One bit per byte; used for codewords and hard decisions where per-position
/// access dominates.
using BitVector = std::vector<std::uint8_t>;

/// Dense GF(2) matrix, row-major, rows packed into 64-bit words.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
  /// Parses whitespace-separated rows of '0'/'1' characters.
  static BinaryMatrix parse(const std::string& text);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  [[nodiscard]] std::span<std::uint64_t> row_words(std::size_t r) noexcept {
    return {data_.data() + r * words_, words_};
  }
  [[nodiscard]] std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
    return {data_.data() + r * words_, words_};
  }

  [[nodiscard]] BitVector row(std::size_t r) const;
  void append_row(std::span<const std::uint8_t> bits);
  void append_row_words(std::span<const std::uint64_t> words);
  void xor_row_into(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  /// Reduced row echelon form with zero rows dropped. Pivots are chosen on the
  /// leftmost available column, so the result is canonical for the row space.
  struct Echelon;
  [[nodiscard]] Echelon rref() const;
  [[nodiscard]] std::size_t rank() const;
  /// Basis (as rows) of {x : M x^T = 0}.
  [[nodiscard]] BinaryMatrix null_space() const;
  [[nodiscard]] bool same_row_space(const BinaryMatrix& other) const;
  [[nodiscard]] bool row_space_contains(std::span<const std::uint8_t> v) const;

  /// M v^T over GF(2).
  [[nodiscard]] BitVector multiply(std::span<const std::uint8_t> v) const;
  /// msg * M over GF(2) (row combination).
  [[nodiscard]] BitVector combine_rows(std::span<const std::uint8_t> msg) const;
  /// Columns taken in the given order.
  [[nodiscard]] BinaryMatrix select_columns(std::span<const std::uint32_t> cols) const;
  /// Stacks other's rows below this one's. Column counts must match.
  void append_rows(const BinaryMatrix& other);

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct BinaryMatrix::Echelon {
  BinaryMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Packs a bit-per-byte vector into 64-bit words.
std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits);
BitVector unpack_bits(std::span<const std::uint64_t> words, std::size_t length);

}  // namespace cyclicdd
