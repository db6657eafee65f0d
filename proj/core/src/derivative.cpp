#include "cyclicdd/derivative.hpp"

#include <algorithm>
#include <bit>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

std::vector<std::uint32_t> covered_set(std::uint32_t s) {
  std::vector<std::uint32_t> out;
  if (s == 0) return out;
  // Walk the proper submasks of s (all submasks except s itself).
  for (std::uint32_t sub = (s - 1) & s;; sub = (sub - 1) & s) {
    out.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool closure_inside(std::span<const std::uint32_t> covered, const ExponentSet& set) {
  for (auto x : coset_closure(covered, set.n()))
    if (!set.contains(x)) return false;
  return true;
}

}  // namespace

ExponentSet cyclic_dd(const ExponentSet& set) {
  std::vector<std::uint32_t> members;
  for (auto s : set.representatives()) {
    const auto closed = coset_closure(covered_set(s), set.n());
    members.insert(members.end(), closed.begin(), closed.end());
  }
  return ExponentSet(set.n(), std::move(members));
}

ExponentSet cyclic_da(const ExponentSet& set) {
  std::vector<std::uint32_t> members;
  // Membership depends only on the coset (doubling rotates the binary support),
  // so test one representative per coset.
  for (auto s : all_coset_representatives(set.n())) {
    if (!closure_inside(covered_set(s), set)) continue;
    const auto coset = cyclotomic_coset(s, set.n());
    members.insert(members.end(), coset.begin(), coset.end());
  }
  return ExponentSet(set.n(), std::move(members));
}

BitVector derivative_codeword(std::span<const std::uint8_t> word, FieldElement beta, const Field& field) {
  if (beta.is_zero()) fail(ErrorKind::ZeroDirection, "derivative direction must be nonzero");
  if (word.size() != field.size()) fail(ErrorKind::InvalidArgument, "word length must be 2^m");
  const auto partner = field.translation_partner(beta);
  BitVector out(word.size());
  for (std::size_t p = 0; p < word.size(); ++p) out[p] = word[p] ^ word[partner[p]];
  return out;
}

MinimalDdBasis minimal_dd_basis(const CyclicCode& code, FieldElement beta) {
  const auto& g = code.generator_matrix();
  BinaryMatrix derivs(0, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) derivs.append_row(derivative_codeword(g.row(r), beta, code.field()));
  return MinimalDdBasis{beta, derivs.rref().matrix};
}

bool check_equivalence_shift(std::span<const std::uint8_t> word, std::int64_t b, const Field& field) {
  const auto lhs = cyclic_shift(derivative_codeword(word, field.alpha_pow(b), field), b);
  const auto rhs = derivative_codeword(cyclic_shift(word, b), field.one(), field);
  return lhs == rhs;
}

std::vector<std::uint32_t> pair_transversal(const Field& field, FieldElement beta) {
  if (beta.is_zero()) fail(ErrorKind::ZeroDirection, "transversal direction must be nonzero");
  const std::uint32_t half = field.size() / 2;
  std::vector<std::uint32_t> positions(half);
  for (std::uint32_t t = 0; t < half; ++t) {
    // t's bits are z_1..z_(m-1); the element sum z_j alpha^j has vector form t << 1.
    positions[t] = static_cast<std::uint32_t>(field.position(field.mul(beta, FieldElement{t << 1})));
  }
  return positions;
}

BitVector rm_projection(std::span<const std::uint8_t> word, FieldElement beta, const Field& field) {
  const auto derivative = derivative_codeword(word, beta, field);
  const auto positions = pair_transversal(field, beta);
  BitVector out(positions.size());
  for (std::size_t t = 0; t < positions.size(); ++t) out[t] = derivative[positions[t]];
  return out;
}

std::uint64_t binomial_prefix_sum(unsigned m, int t) {
  std::uint64_t sum = 0;
  std::uint64_t c = 1;  // C(m, i)
  for (int i = 0; i <= t && static_cast<unsigned>(i) <= m; ++i) {
    sum += c;
    c = c * (m - static_cast<unsigned>(i)) / static_cast<unsigned>(i + 1);
  }
  return sum;
}

std::uint64_t dd_dimension_bound(const ExponentSet& set, unsigned m) {
  return binomial_prefix_sum(m, static_cast<int>(set.degree()) - 1);
}

std::uint64_t da_dimension_bound(const ExponentSet& set, unsigned m) {
  return binomial_prefix_sum(m, static_cast<int>(set.degree()) + 1);
}

}  // namespace cyclicdd
