#include "cyclicdd/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

ExponentSet::ExponentSet(std::uint32_t n, std::vector<std::uint32_t> members)
    : n_(n), members_(std::move(members)), in_(n, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto j : members_) {
    if (j >= n_) fail(ErrorKind::InvalidArgument, "exponent " + std::to_string(j) + " outside [n]");
    in_[j] = true;
  }
  for (auto j : members_) {
    const auto twice = static_cast<std::uint32_t>((std::uint64_t{j} * 2) % n_);
    if (!in_[twice]) {
      fail(ErrorKind::InvalidArgument,
           "exponent set not closed under doubling: " + std::to_string(j) + " in, " + std::to_string(twice) + " out");
    }
  }
}

ExponentSet ExponentSet::closure_of(std::uint32_t n, std::span<const std::uint32_t> members) {
  return ExponentSet(n, coset_closure(members, n));
}

ExponentSet ExponentSet::full(std::uint32_t n) {
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t j = 0; j < n; ++j) all[j] = j;
  return ExponentSet(n, std::move(all));
}

std::vector<std::uint32_t> ExponentSet::representatives() const { return coset_representatives(members_, n_); }

unsigned ExponentSet::degree() const noexcept {
  unsigned d = 0;
  for (auto j : members_) d = std::max(d, static_cast<unsigned>(std::popcount(j)));
  return d;
}

bool ExponentSet::is_subset_of(const ExponentSet& other) const noexcept {
  if (n_ != other.n_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](std::uint32_t j) { return other.contains(j); });
}

ExponentSet exponent_set_from_generator(const Gf2Poly& gen, const Field& field) {
  const std::uint32_t n = field.n();
  if (gen.is_zero() || !gen.divides(Gf2Poly::x_n_minus_one(n))) {
    fail(ErrorKind::NotADivisor, "generator " + gen.to_hex() + " does not divide x^" + std::to_string(n) + " - 1");
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!gen.evaluate(field, field.alpha_pow(-static_cast<std::int64_t>(j))).is_zero()) members.push_back(j);
  }
  return ExponentSet(n, std::move(members));
}

Gf2Poly generator_from_exponent_set(const ExponentSet& set, const Field& field) {
  if (set.n() != field.n()) fail(ErrorKind::InvalidArgument, "exponent set and field disagree on n");
  // Coefficients over GF(2^m), lowest degree first.
  std::vector<FieldElement> poly{field.one()};
  for (std::uint32_t j = 0; j < set.n(); ++j) {
    if (set.contains(j)) continue;
    const FieldElement root = field.alpha_pow(-static_cast<std::int64_t>(j));
    std::vector<FieldElement> next(poly.size() + 1, field.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = Field::add(next[i + 1], poly[i]);
      next[i] = Field::add(next[i], field.mul(poly[i], root));
    }
    poly = std::move(next);
  }
  std::vector<std::uint8_t> coeffs(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].value() > 1) fail(ErrorKind::NonBinaryResult, "generator polynomial has non-binary coefficients");
    coeffs[i] = static_cast<std::uint8_t>(poly[i].value());
  }
  return Gf2Poly(std::move(coeffs));
}

ExponentSet rm_exponent_set(unsigned r, unsigned m) {
  if (m < kMinFieldDegree || m > kMaxFieldDegree || r > m) {
    fail(ErrorKind::InvalidArgument, "RM(r,m) needs 0 <= r <= m and 2 <= m <= 16");
  }
  const std::uint32_t n = (1u << m) - 1;
  std::vector<std::uint32_t> members;
  for (std::uint32_t j = 0; j < n; ++j)
    if (static_cast<unsigned>(std::popcount(j)) <= r) members.push_back(j);
  return ExponentSet(n, std::move(members));
}

ExponentSet bch_exponent_set(unsigned m, unsigned designed_distance) {
  if (m < kMinFieldDegree || m > kMaxFieldDegree) fail(ErrorKind::InvalidArgument, "m outside [2,16]");
  const std::uint32_t n = (1u << m) - 1;
  if (designed_distance < 1 || designed_distance > n) fail(ErrorKind::InvalidArgument, "designed distance outside [1,n]");
  std::vector<std::uint32_t> zero_exponents;
  for (std::uint32_t i = 1; i < designed_distance; ++i) zero_exponents.push_back(i);
  std::vector<bool> is_zero(n, false);
  for (auto z : coset_closure(zero_exponents, n)) is_zero[z] = true;
  std::vector<std::uint32_t> members;
  for (std::uint32_t j = 0; j < n; ++j)
    if (!is_zero[(n - j) % n]) members.push_back(j);
  return ExponentSet(n, std::move(members));
}

BchBound bch_bound(const ExponentSet& set) {
  const std::uint32_t n = set.n();
  unsigned longest = 0;
  if (set.size() == 0) {
    longest = n;
  } else {
    // Start each run right after a member so wrap-around runs are counted once.
    for (auto start : set.members()) {
      unsigned run = 0;
      std::uint32_t j = (start + 1) % n;
      while (!set.contains(j)) {
        ++run;
        j = (j + 1) % n;
      }
      longest = std::max(longest, run);
    }
  }
  BchBound b;
  b.cyclic = longest + 1;
  b.extended = b.cyclic + (b.cyclic % 2);
  return b;
}

MsSpectrum ms_transform(std::span<const std::uint8_t> cyclic_part, const Field& field) {
  const std::uint32_t n = field.n();
  if (cyclic_part.size() != n) fail(ErrorKind::InvalidArgument, "MS transform needs a length-n vector");
  MsSpectrum spectrum(n, field.zero());
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!cyclic_part[i]) continue;
      // alpha^(-ij)
      const std::uint64_t e = (std::uint64_t{i} * j) % n;
      acc ^= field.antilog(static_cast<std::uint32_t>((n - e) % n)).value();
    }
    spectrum[j] = FieldElement{acc};
  }
  return spectrum;
}

BitVector ms_evaluate(std::span<const FieldElement> spectrum, const Field& field, bool extended) {
  const std::uint32_t n = field.n();
  if (spectrum.size() != n) fail(ErrorKind::InvalidArgument, "spectrum must have n coefficients");
  BitVector out;
  out.reserve(n + 1);
  if (extended) {
    if (spectrum[0].value() > 1) fail(ErrorKind::NonBinaryResult, "A(0) outside GF(2)");
    out.push_back(static_cast<std::uint8_t>(spectrum[0].value()));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (spectrum[j].is_zero()) continue;
      const std::uint64_t e = (std::uint64_t{i} * j) % n;
      acc ^= field.mul(spectrum[j], field.antilog(static_cast<std::uint32_t>(e))).value();
    }
    if (acc > 1) fail(ErrorKind::NonBinaryResult, "evaluation at alpha^" + std::to_string(i) + " outside GF(2)");
    out.push_back(static_cast<std::uint8_t>(acc));
  }
  return out;
}

BitVector cyclic_shift(std::span<const std::uint8_t> word, std::int64_t b) {
  if (word.size() < 2) return BitVector(word.begin(), word.end());
  const auto n = static_cast<std::int64_t>(word.size() - 1);
  auto shift = b % n;
  if (shift < 0) shift += n;
  BitVector out(word.size());
  out[0] = word[0];
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(1 + i)] = word[static_cast<std::size_t>(1 + (i + shift) % n)];
  return out;
}

CyclicCode::CyclicCode(std::shared_ptr<const Field> field, ExponentSet set, Gf2Poly gen)
    : field_(std::move(field)), exponents_(std::move(set)), gen_(std::move(gen)) {
  const std::uint32_t n = field_->n();
  const std::size_t k = exponents_.size();
  g_ = BinaryMatrix(k, n + 1);
  const auto deg = static_cast<std::size_t>(gen_.degree());
  for (std::size_t r = 0; r < k; ++r) {
    bool parity = false;
    for (std::size_t t = 0; t <= deg; ++t) {
      if (!gen_.coeff(t)) continue;
      g_.set(r, 1 + r + t, true);
      parity = !parity;
    }
    g_.set(r, 0, parity);
  }
  h_ = g_.null_space();
}

CyclicCode CyclicCode::from_generator(std::shared_ptr<const Field> field, const Gf2Poly& gen) {
  auto set = exponent_set_from_generator(gen, *field);
  return CyclicCode(std::move(field), std::move(set), gen);
}

CyclicCode CyclicCode::from_exponent_set(std::shared_ptr<const Field> field, ExponentSet set) {
  if (set.n() != field->n()) fail(ErrorKind::InvalidArgument, "exponent set and field disagree on n");
  if (set.size() == 0) fail(ErrorKind::InvalidArgument, "empty exponent set describes the zero code");
  auto gen = generator_from_exponent_set(set, *field);
  return CyclicCode(std::move(field), std::move(set), std::move(gen));
}

bool CyclicCode::is_member(std::span<const std::uint8_t> word) const {
  if (word.size() != length()) return false;
  const auto spectrum = ms_transform(word.subspan(1), *field_);
  for (std::uint32_t j = 0; j < spectrum.size(); ++j) {
    if (!spectrum[j].is_zero() && !exponents_.contains(j)) return false;
  }
  return spectrum[0].value() == word[0];
}

bool CyclicCode::satisfies_checks(std::span<const std::uint8_t> word) const {
  if (word.size() != length()) return false;
  const auto packed = pack_bits(word);
  for (std::size_t r = 0; r < h_.rows(); ++r) {
    const auto row = h_.row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < row.size(); ++w) acc ^= row[w] & packed[w];
    if (std::popcount(acc) & 1) return false;
  }
  return true;
}

unsigned min_distance_exhaustive(const BinaryMatrix& generator) {
  const std::size_t k = generator.rows();
  if (k > kMaxExhaustiveDimension) {
    fail(ErrorKind::DimensionTooLarge, "exhaustive search limited to k <= 20, got k=" + std::to_string(k));
  }
  const std::size_t words = generator.words_per_row();
  std::vector<std::uint64_t> acc(words, 0);
  unsigned best = std::numeric_limits<unsigned>::max();
  // Gray-code walk: step i toggles row ctz(i).
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    const auto row = generator.row_words(static_cast<std::size_t>(std::countr_zero(i)));
    unsigned weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      acc[w] ^= row[w];
      weight += static_cast<unsigned>(std::popcount(acc[w]));
    }
    if (weight > 0) best = std::min(best, weight);
  }
  return best == std::numeric_limits<unsigned>::max() ? 0 : best;
}

}  // namespace cyclicdd
