#include "cyclicdd/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "cyclicdd/code.hpp"
#include "cyclicdd/error.hpp"

namespace cyclicdd {

double boxplus(double a, double b) noexcept {
  a = clip_llr(a);
  b = clip_llr(b);
  const double sign = ((a < 0) != (b < 0)) ? -1.0 : 1.0;
  return sign * std::min(std::abs(a), std::abs(b)) + std::log1p(std::exp(-std::abs(a + b))) -
         std::log1p(std::exp(-std::abs(a - b)));
}

double correlation(std::span<const std::uint8_t> word, std::span<const double> llr) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < word.size(); ++i) acc += word[i] ? -llr[i] : llr[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Sum-product

SpaDecoder::SpaDecoder(SparseParityMatrix h, unsigned max_iterations)
    : h_(std::move(h)), max_iterations_(max_iterations) {
  if (max_iterations_ == 0) fail(ErrorKind::InvalidArgument, "SPA needs at least one iteration");
  if (h_.rows() == 0) fail(ErrorKind::EmptyParityMatrix, "SPA needs a nonempty parity-check matrix");
  row_start_.reserve(h_.rows() + 1);
  col_edges_.resize(h_.cols());
  row_start_.push_back(0);
  for (std::size_t r = 0; r < h_.rows(); ++r) {
    for (auto c : h_.row(r)) {
      col_edges_[c].push_back(static_cast<std::uint32_t>(edge_col_.size()));
      edge_col_.push_back(c);
    }
    row_start_.push_back(edge_col_.size());
  }
}

DecodeResult SpaDecoder::decode(std::span<const double> llr) const {
  const std::size_t n = h_.cols();
  if (llr.size() != n) fail(ErrorKind::InvalidArgument, "LLR length does not match parity-check columns");
  constexpr double kTanhLimit = 1.0 - 1e-12;

  std::vector<double> channel(n);
  for (std::size_t i = 0; i < n; ++i) channel[i] = clip_llr(llr[i]);

  const std::size_t edges = edge_col_.size();
  std::vector<double> v2c(edges), c2v(edges, 0.0), t(edges), backward;
  for (std::size_t e = 0; e < edges; ++e) v2c[e] = channel[edge_col_[e]];

  DecodeResult result;
  result.bits.assign(n, 0);
  std::vector<std::uint8_t> undecided(n, 0);

  for (unsigned it = 1; it <= max_iterations_; ++it) {
    for (std::size_t r = 0; r + 1 < row_start_.size(); ++r) {
      const std::size_t begin = row_start_[r];
      const std::size_t end = row_start_[r + 1];
      const std::size_t deg = end - begin;
      for (std::size_t e = begin; e < end; ++e) t[e] = std::tanh(0.5 * v2c[e]);
      // Exclusive products by forward/backward sweeps so zero messages stay exact.
      backward.assign(deg + 1, 1.0);
      for (std::size_t i = deg; i-- > 0;) backward[i] = backward[i + 1] * t[begin + i];
      double forward = 1.0;
      for (std::size_t i = 0; i < deg; ++i) {
        const double p = std::clamp(forward * backward[i + 1], -kTanhLimit, kTanhLimit);
        c2v[begin + i] = 2.0 * std::atanh(p);
        forward *= t[begin + i];
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      double total = channel[c];
      for (auto e : col_edges_[c]) total += c2v[e];
      for (auto e : col_edges_[c]) v2c[e] = total - c2v[e];
      result.bits[c] = total < 0.0 ? 1 : 0;
      undecided[c] = total == 0.0 ? 1 : 0;
    }
    result.iterations = it;
    result.flops += flops_per_iteration();
    if (std::none_of(undecided.begin(), undecided.end(), [](std::uint8_t u) { return u != 0; }) &&
        h_.syndrome_zero(result.bits)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Ordered statistics

std::uint64_t osd_candidate_count(std::size_t k, unsigned order) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (unsigned i = 0; i <= order && i <= k; ++i) {
    total += c;
    c = c * (k - i) / (i + 1);
  }
  return total;
}

OsdDecoder::OsdDecoder(BinaryMatrix generator, unsigned order) : g_(std::move(generator)), order_(order) {
  if (g_.rows() == 0) fail(ErrorKind::RankDeficient, "OSD needs a nonempty generator matrix");
  if (g_.rank() != g_.rows()) {
    fail(ErrorKind::RankDeficient, "generator rows are dependent (rank " + std::to_string(g_.rank()) + " < " +
                                       std::to_string(g_.rows()) + ")");
  }
}

double OsdDecoder::flops_per_call() const noexcept {
  const auto n = static_cast<double>(g_.cols());
  const auto k = static_cast<double>(g_.rows());
  const auto patterns = static_cast<double>(osd_candidate_count(g_.rows(), order_) - 1);
  return n * std::log2(n) + patterns * (n - k);
}

namespace {

struct OsdSearch {
  const BinaryMatrix& sys;              // systematic rows, permuted columns
  std::span<const std::uint64_t> hard;  // permuted hard decisions
  std::span<const double> weight;       // permuted |L|
  unsigned order;
  std::size_t words;

  std::vector<std::uint64_t> best;
  double best_cost = 0.0;

  double cost(std::span<const std::uint64_t> word) const {
    double d = 0.0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t diff = word[w] ^ hard[w];
      while (diff) {
        d += weight[w * 64 + static_cast<std::size_t>(std::countr_zero(diff))];
        diff &= diff - 1;
      }
    }
    return d;
  }

  // Candidates are visited in lexicographic order of their flip sets, after the
  // order-0 word; a strictly smaller discrepancy is needed to replace the best.
  void extend(std::vector<std::uint64_t>& word, std::size_t first_row, unsigned depth) {
    if (depth == order) return;
    for (std::size_t r = first_row; r < sys.rows(); ++r) {
      const auto row = sys.row_words(r);
      for (std::size_t w = 0; w < words; ++w) word[w] ^= row[w];
      const double c = cost(word);
      if (c < best_cost) {
        best_cost = c;
        best = word;
      }
      extend(word, r + 1, depth + 1);
      for (std::size_t w = 0; w < words; ++w) word[w] ^= row[w];
    }
  }
};

}  // namespace

DecodeResult OsdDecoder::decode(std::span<const double> llr) const {
  const std::size_t n = g_.cols();
  const std::size_t k = g_.rows();
  if (llr.size() != n) fail(ErrorKind::InvalidArgument, "LLR length does not match generator columns");

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return std::abs(llr[a]) > std::abs(llr[b]); });

  BinaryMatrix sys = g_.select_columns(perm);
  std::size_t pivots = 0;
  for (std::size_t col = 0; col < n && pivots < k; ++col) {
    std::size_t r = pivots;
    while (r < k && !sys.get(r, col)) ++r;
    if (r == k) continue;
    sys.swap_rows(pivots, r);
    for (std::size_t i = 0; i < k; ++i)
      if (i != pivots && sys.get(i, col)) sys.xor_row_into(i, pivots);
    ++pivots;
  }
  if (pivots < k) fail(ErrorKind::RankDeficient, "no k independent columns");

  BitVector hard_bits(n);
  std::vector<double> weight(sys.words_per_row() * 64, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    hard_bits[j] = llr[perm[j]] < 0.0 ? 1 : 0;
    weight[j] = std::abs(llr[perm[j]]);
  }
  const auto hard = pack_bits(hard_bits);

  // Order-0 word: re-encode the hard decisions on the pivot (most reliable) columns.
  std::vector<std::uint64_t> word(sys.words_per_row(), 0);
  for (std::size_t r = 0; r < k; ++r) {
    // Leading one of row r sits at its pivot column.
    std::size_t pivot_col = 0;
    const auto row = sys.row_words(r);
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w]) {
        pivot_col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
        break;
      }
    }
    if (hard_bits[pivot_col])
      for (std::size_t w = 0; w < row.size(); ++w) word[w] ^= row[w];
  }

  OsdSearch search{sys, hard, weight, order_, sys.words_per_row(), word, 0.0};
  search.best_cost = search.cost(word);
  search.extend(word, 0, 0);

  DecodeResult result;
  result.bits.assign(n, 0);
  const auto permuted = unpack_bits(search.best, n);
  for (std::size_t j = 0; j < n; ++j) result.bits[perm[j]] = permuted[j];
  result.converged = true;
  result.iterations = 1;
  result.flops = flops_per_call();
  return result;
}

// ---------------------------------------------------------------------------
// Exhaustive maximum likelihood

MldDecoder::MldDecoder(BinaryMatrix generator) : g_(std::move(generator)) {
  if (g_.rows() > kMaxExhaustiveDimension) {
    fail(ErrorKind::DimensionTooLarge, "MLD limited to k <= 20, got k=" + std::to_string(g_.rows()));
  }
  row_support_.resize(g_.rows());
  for (std::size_t r = 0; r < g_.rows(); ++r)
    for (std::size_t c = 0; c < g_.cols(); ++c)
      if (g_.get(r, c)) row_support_[r].push_back(static_cast<std::uint32_t>(c));
}

DecodeResult MldDecoder::decode(std::span<const double> llr) const {
  const std::size_t n = g_.cols();
  if (llr.size() != n) fail(ErrorKind::InvalidArgument, "LLR length does not match generator columns");
  const std::size_t k = g_.rows();

  BitVector word(n, 0);
  double best_score = correlation(word, llr);
  std::uint64_t best_msg = 0;
  BitVector best_word = word;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    for (auto c : row_support_[static_cast<std::size_t>(std::countr_zero(i))]) word[c] ^= 1u;
    const std::uint64_t msg = i ^ (i >> 1);
    const double score = correlation(word, llr);
    if (score > best_score || (score == best_score && msg < best_msg)) {
      best_score = score;
      best_msg = msg;
      best_word = word;
    }
  }
  DecodeResult result;
  result.bits = std::move(best_word);
  result.converged = true;
  result.iterations = 1;
  result.flops = static_cast<double>(std::uint64_t{1} << k) * static_cast<double>(n);
  return result;
}

}  // namespace cyclicdd
