#include "cyclicdd/parity_matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

std::string_view to_string(ParityProvenance p) noexcept {
  switch (p) {
    case ParityProvenance::File: return "file";
    case ParityProvenance::EgLines: return "eg-lines";
    case ParityProvenance::DualOrbit: return "dual-orbit";
    case ParityProvenance::Dense: return "dense";
  }
  return "unknown";
}

SparseParityMatrix::SparseParityMatrix(std::size_t cols, std::vector<std::vector<std::uint32_t>> rows,
                                       ParityProvenance provenance)
    : rows_(std::move(rows)), cols_(cols), provenance_(provenance) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (auto c : row) {
      if (c >= cols) fail(ErrorKind::InvalidArgument, "parity-check column index out of range");
      cols_[c].push_back(static_cast<std::uint32_t>(r));
    }
    edges_ += row.size();
  }
}

SparseParityMatrix SparseParityMatrix::from_dense(const BinaryMatrix& dense, ParityProvenance provenance) {
  std::vector<std::vector<std::uint32_t>> rows(dense.rows());
  for (std::size_t r = 0; r < dense.rows(); ++r)
    for (std::size_t c = 0; c < dense.cols(); ++c)
      if (dense.get(r, c)) rows[r].push_back(static_cast<std::uint32_t>(c));
  return SparseParityMatrix(dense.cols(), std::move(rows), provenance);
}

std::vector<std::size_t> SparseParityMatrix::row_weights() const {
  std::vector<std::size_t> w;
  w.reserve(rows_.size());
  for (const auto& r : rows_) w.push_back(r.size());
  return w;
}

std::vector<std::size_t> SparseParityMatrix::column_weights() const {
  std::vector<std::size_t> w;
  w.reserve(cols_.size());
  for (const auto& c : cols_) w.push_back(c.size());
  return w;
}

BinaryMatrix SparseParityMatrix::to_dense() const {
  BinaryMatrix m(rows_.size(), cols_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (auto c : rows_[r]) m.set(r, c, true);
  return m;
}

bool SparseParityMatrix::orthogonal_to(const BinaryMatrix& generator) const {
  if (generator.cols() != cols()) return false;
  for (std::size_t g = 0; g < generator.rows(); ++g) {
    for (const auto& row : rows_) {
      unsigned parity = 0;
      for (auto c : row) parity ^= generator.get(g, c) ? 1u : 0u;
      if (parity) return false;
    }
  }
  return true;
}

bool SparseParityMatrix::syndrome_zero(std::span<const std::uint8_t> word) const {
  for (const auto& row : rows_) {
    unsigned parity = 0;
    for (auto c : row) parity ^= word[c];
    if (parity & 1u) return false;
  }
  return true;
}

SparseParityMatrix eg_line_parity_matrix(unsigned mu, unsigned s, const Field& field) {
  if (mu == 0 || s == 0 || mu * s != field.m()) {
    fail(ErrorKind::InvalidGeometry, "EG(" + std::to_string(mu) + ", 2^" + std::to_string(s) +
                                         ") does not have 2^" + std::to_string(field.m()) + " points");
  }
  const auto scalars = field.subfield(s);
  const std::uint32_t points = field.size();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t b = 1; b < points; ++b) {
    // One direction per 1-dimensional GF(2^s)-subspace: keep b only if it is
    // the smallest vector form among its nonzero multiples.
    bool canonical = true;
    for (auto t : scalars)
      if (!t.is_zero() && field.mul(t, FieldElement{b}).value() < b) canonical = false;
    if (!canonical) continue;
    for (std::uint32_t a = 0; a < points; ++a) {
      std::vector<std::uint32_t> line_values;
      line_values.reserve(scalars.size());
      bool a_is_min = true;
      for (auto t : scalars) {
        const auto v = Field::add(FieldElement{a}, field.mul(t, FieldElement{b})).value();
        if (v < a) a_is_min = false;
        line_values.push_back(v);
      }
      if (!a_is_min) continue;
      std::vector<std::uint32_t> line;
      line.reserve(line_values.size());
      for (auto v : line_values) line.push_back(static_cast<std::uint32_t>(field.position(FieldElement{v})));
      rows.push_back(std::move(line));
    }
  }
  return SparseParityMatrix(points, std::move(rows), ParityProvenance::EgLines);
}

namespace {

// Visits every nonzero word of the row space of `basis` (Gray-code order) and
// hands the packed word plus its weight to `visit`.
template <typename Visit>
void for_each_codeword(const BinaryMatrix& basis, Visit&& visit) {
  const std::size_t k = basis.rows();
  const std::size_t words = basis.words_per_row();
  const std::uint64_t total = std::uint64_t{1} << k;
  if (words == 1) {
    std::vector<std::uint64_t> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r] = basis.row_words(r)[0];
    std::uint64_t acc = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      acc ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
      visit(std::span<const std::uint64_t>(&acc, 1), static_cast<unsigned>(std::popcount(acc)));
    }
    return;
  }
  std::vector<std::uint64_t> acc(words, 0);
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto row = basis.row_words(static_cast<std::size_t>(std::countr_zero(i)));
    unsigned weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      acc[w] ^= row[w];
      weight += static_cast<unsigned>(std::popcount(acc[w]));
    }
    visit(std::span<const std::uint64_t>(acc), weight);
  }
}

BinaryMatrix dual_basis_checked(const BinaryMatrix& generator) {
  auto dual = generator.null_space();
  if (dual.rows() > kMaxDualOrbitDimension) {
    fail(ErrorKind::DualTooLarge, "dual dimension " + std::to_string(dual.rows()) + " exceeds 30");
  }
  return dual;
}

SparseParityMatrix collect_low_weight(const BinaryMatrix& dual, unsigned max_row_weight) {
  std::set<std::vector<std::uint64_t>> found;
  for_each_codeword(dual, [&](std::span<const std::uint64_t> word, unsigned weight) {
    if (weight <= max_row_weight) found.emplace(word.begin(), word.end());
  });
  if (found.empty()) {
    fail(ErrorKind::EmptyParityMatrix, "no dual codeword of weight <= " + std::to_string(max_row_weight));
  }
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(found.size());
  for (const auto& word : found) {
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < dual.cols(); ++c)
      if ((word[c / 64] >> (c % 64)) & 1u) row.push_back(static_cast<std::uint32_t>(c));
    rows.push_back(std::move(row));
  }
  return SparseParityMatrix(dual.cols(), std::move(rows), ParityProvenance::DualOrbit);
}

}  // namespace

SparseParityMatrix dual_orbit_parity_matrix(const BinaryMatrix& generator, unsigned max_row_weight) {
  const auto dual = dual_basis_checked(generator);
  auto h = collect_low_weight(dual, max_row_weight);
  if (!h.orthogonal_to(generator)) fail(ErrorKind::InvalidArgument, "dual enumeration produced a non-orthogonal row");
  return h;
}

SparseParityMatrix dual_orbit_parity_matrix_full_rank(const BinaryMatrix& generator) {
  const auto dual = dual_basis_checked(generator);
  if (dual.rows() == 0) fail(ErrorKind::EmptyParityMatrix, "code is the full space; no parity checks");
  unsigned min_weight = ~0u;
  for_each_codeword(dual, [&](std::span<const std::uint64_t>, unsigned w) { min_weight = std::min(min_weight, w); });
  for (unsigned w = min_weight;; w += 2) {
    auto h = collect_low_weight(dual, w);
    if (h.to_dense().rank() == dual.rows()) return h;
  }
}

SparseParityMatrix read_alist(std::istream& in) {
  auto next = [&in](const char* what) {
    long v = 0;
    if (!(in >> v)) fail(ErrorKind::ParseError, std::string("alist: expected ") + what);
    if (v < 0) fail(ErrorKind::ParseError, std::string("alist: negative ") + what);
    return static_cast<std::size_t>(v);
  };
  const std::size_t n = next("column count");
  const std::size_t m = next("row count");
  const std::size_t max_col = next("max column degree");
  const std::size_t max_row = next("max row degree");
  std::vector<std::size_t> col_deg(n), row_deg(m);
  for (auto& d : col_deg) d = next("column degree");
  for (auto& d : row_deg) d = next("row degree");
  // Column lists are redundant with row lists; read them only to advance.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < std::max(col_deg[c], max_col); ++i) {
      if (i >= col_deg[c]) {
        // Zero padding is optional; peek for it.
        in >> std::ws;
        if (in.peek() == '0') next("padding");
        continue;
      }
      next("column entry");
    }
  std::vector<std::vector<std::uint32_t>> rows(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < std::max(row_deg[r], max_row); ++i) {
      if (i >= row_deg[r]) {
        in >> std::ws;
        if (in.peek() == '0') next("padding");
        continue;
      }
      const auto idx = next("row entry");
      if (idx == 0 || idx > n) fail(ErrorKind::ParseError, "alist: row entry out of range");
      rows[r].push_back(static_cast<std::uint32_t>(idx - 1));
    }
  }
  SparseParityMatrix h(n, std::move(rows), ParityProvenance::File);
  if (h.column_weights() != col_deg) fail(ErrorKind::ParseError, "alist: column degrees disagree with row lists");
  return h;
}

void write_alist(std::ostream& out, const SparseParityMatrix& h) {
  const auto cw = h.column_weights();
  const auto rw = h.row_weights();
  const auto max_c = cw.empty() ? 0 : *std::max_element(cw.begin(), cw.end());
  const auto max_r = rw.empty() ? 0 : *std::max_element(rw.begin(), rw.end());
  out << h.cols() << ' ' << h.rows() << '\n' << max_c << ' ' << max_r << '\n';
  auto write_list = [&out](const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    out << '\n';
  };
  write_list(cw);
  write_list(rw);
  auto write_indices = [&out](std::span<const std::uint32_t> idx, std::size_t pad_to) {
    for (std::size_t i = 0; i < pad_to; ++i) out << (i ? " " : "") << (i < idx.size() ? idx[i] + 1 : 0);
    out << '\n';
  };
  for (std::size_t c = 0; c < h.cols(); ++c) write_indices(h.column(c), max_c);
  for (std::size_t r = 0; r < h.rows(); ++r) write_indices(h.row(r), max_r);
}

}  // namespace cyclicdd
