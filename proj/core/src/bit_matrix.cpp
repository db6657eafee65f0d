#include "cyclicdd/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_, 0) {}

BinaryMatrix BinaryMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BinaryMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<BitVector> rows;
  while (in >> token) {
    BitVector r;
    for (char ch : token) {
      if (ch != '0' && ch != '1') fail(ErrorKind::ParseError, "matrix rows must contain only 0/1");
      r.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    if (!rows.empty() && r.size() != rows.front().size()) fail(ErrorKind::ParseError, "ragged matrix rows");
    rows.push_back(std::move(r));
  }
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

BitVector BinaryMatrix::row(std::size_t r) const { return unpack_bits(row_words(r), cols_); }

void BinaryMatrix::append_row(std::span<const std::uint8_t> bits) {
  if (bits.size() != cols_) fail(ErrorKind::InvalidArgument, "row length does not match column count");
  append_row_words(pack_bits(bits));
}

void BinaryMatrix::append_row_words(std::span<const std::uint64_t> words) {
  if (words.size() != words_) fail(ErrorKind::InvalidArgument, "row word count does not match");
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

void BinaryMatrix::xor_row_into(std::size_t dst, std::size_t src) noexcept {
  auto* d = data_.data() + dst * words_;
  const auto* s = data_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

BinaryMatrix::Echelon BinaryMatrix::rref() const {
  Echelon e{*this, {}};
  auto& m = e.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t r = pivot_row;
    while (r < rows_ && !m.get(r, c)) ++r;
    if (r == rows_) continue;
    m.swap_rows(pivot_row, r);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != pivot_row && m.get(i, c)) m.xor_row_into(i, pivot_row);
    }
    e.pivots.push_back(c);
    ++pivot_row;
  }
  m.rows_ = pivot_row;
  m.data_.resize(pivot_row * words_);
  return e;
}

std::size_t BinaryMatrix::rank() const { return rref().pivots.size(); }

BinaryMatrix BinaryMatrix::null_space() const {
  const auto e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  BinaryMatrix basis(0, cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.matrix.get(i, free)) v[e.pivots[i]] = 1;
    }
    basis.append_row(v);
  }
  return basis;
}

bool BinaryMatrix::same_row_space(const BinaryMatrix& other) const {
  if (cols_ != other.cols_) return false;
  return rref().matrix == other.rref().matrix;
}

bool BinaryMatrix::row_space_contains(std::span<const std::uint8_t> v) const {
  BinaryMatrix extended = *this;
  extended.append_row(v);
  return extended.rank() == rank();
}

BitVector BinaryMatrix::multiply(std::span<const std::uint8_t> v) const {
  if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "vector length does not match column count");
  const auto packed = pack_bits(v);
  BitVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row = row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_; ++w) acc ^= row[w] & packed[w];
    out[r] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
  }
  return out;
}

BitVector BinaryMatrix::combine_rows(std::span<const std::uint8_t> msg) const {
  if (msg.size() != rows_) fail(ErrorKind::InvalidArgument, "message length does not match row count");
  std::vector<std::uint64_t> acc(words_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!msg[r]) continue;
    const auto row = row_words(r);
    for (std::size_t w = 0; w < words_; ++w) acc[w] ^= row[w];
  }
  return unpack_bits(acc, cols_);
}

BinaryMatrix BinaryMatrix::select_columns(std::span<const std::uint32_t> cols) const {
  BinaryMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(r, cols[j])) out.set(r, j, true);
  return out;
}

void BinaryMatrix::append_rows(const BinaryMatrix& other) {
  if (other.cols_ != cols_) fail(ErrorKind::InvalidArgument, "column counts differ");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint64_t> words(words_for(bits.size()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  return words;
}

BitVector unpack_bits(std::span<const std::uint64_t> words, std::size_t length) {
  BitVector bits(length, 0);
  for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<std::uint8_t>((words[i / 64] >> (i % 64)) & 1u);
  return bits;
}

}  // namespace cyclicdd
