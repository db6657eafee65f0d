#include "cyclicdd/ddcodec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cyclicdd/derivative.hpp"
#include "cyclicdd/error.hpp"

namespace cyclicdd {

namespace {

LlrVector combine_pairs(std::span<const double> llr, std::span<const std::uint32_t> partner) {
  LlrVector out(llr.size());
  for (std::size_t p = 0; p < llr.size(); ++p) {
    const std::size_t q = partner[p];
    // Each pair is evaluated once so both members get the identical value.
    if (q < p) {
      out[p] = out[q];
    } else {
      out[p] = boxplus(llr[p], llr[q]);
    }
  }
  return out;
}

LlrVector vote_with_partner(std::span<const double> llr, std::span<const std::uint8_t> a_hat,
                            std::span<const std::uint32_t> partner) {
  LlrVector out(llr.size());
  for (std::size_t p = 0; p < llr.size(); ++p) out[p] = a_hat[p] ? -llr[partner[p]] : llr[partner[p]];
  return out;
}

// out at alpha^i = in at alpha^(i + b); position 0 fixed.
LlrVector shift_llr(std::span<const double> in, std::int64_t b) {
  const auto n = static_cast<std::int64_t>(in.size() - 1);
  auto s = b % n;
  if (s < 0) s += n;
  LlrVector out(in.size());
  out[0] = in[0];
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(1 + i)] = in[static_cast<std::size_t>(1 + (i + s) % n)];
  return out;
}

void check_input(std::span<const double> llr, const CyclicCode& code, const DirectionSet& directions,
                 unsigned max_iterations) {
  if (llr.size() != code.length()) fail(ErrorKind::InvalidArgument, "LLR length does not match the code");
  if (directions.empty()) fail(ErrorKind::InvalidArgument, "derivative decoding needs at least one direction");
  if (max_iterations == 0) fail(ErrorKind::InvalidArgument, "derivative decoding needs at least one iteration");
}

BitVector hard_decision(std::span<const double> llr) {
  BitVector bits(llr.size());
  for (std::size_t i = 0; i < llr.size(); ++i) bits[i] = llr[i] < 0.0 ? 1 : 0;
  return bits;
}

// vote_for(current, d, inner) returns the vote of direction index d; the
// outer loop averages and tests for a codeword.
template <typename VoteFor>
DecodeReport vote_loop(std::span<const double> llr, const CyclicCode& code, const DirectionSet& directions,
                       unsigned max_iterations, VoteFor&& vote_for) {
  const std::size_t n = code.length();
  const double per_direction = (kDerivativeFlopsPerPosition + kVoteFlopsPerPosition) * static_cast<double>(n);
  DecodeReport report;
  report.direction_iterations.assign(directions.size(), 0);
  LlrVector current(llr.begin(), llr.end());
  for (auto& v : current) v = clip_llr(v);

  for (unsigned it = 1; it <= max_iterations; ++it) {
    LlrVector sum(n, 0.0);
    for (std::size_t d = 0; d < directions.size(); ++d) {
      DecodeResult inner;
      const auto vote = vote_for(current, d, inner);
      for (std::size_t i = 0; i < n; ++i) sum[i] += vote[i];
      report.flops += per_direction + inner.flops;
      report.inner_calls += 1;
      report.inner_iterations += inner.iterations;
      report.direction_iterations[d] += inner.iterations;
    }
    const double scale = 1.0 / static_cast<double>(directions.size());
    for (std::size_t i = 0; i < n; ++i) current[i] = sum[i] * scale;
    report.codeword = hard_decision(current);
    report.iterations = it;
    if (code.satisfies_checks(report.codeword)) {
      report.converged = true;
      break;
    }
  }
  return report;
}

}  // namespace

LlrVector derivative_llr(std::span<const double> llr, FieldElement beta, const Field& field) {
  if (beta.is_zero()) fail(ErrorKind::ZeroDirection, "derivative direction must be nonzero");
  if (llr.size() != field.size()) fail(ErrorKind::InvalidArgument, "LLR length must be 2^m");
  return combine_pairs(llr, field.translation_partner(beta));
}

LlrVector get_vote(std::span<const double> llr, std::span<const std::uint8_t> a_hat, FieldElement beta,
                   const Field& field) {
  if (llr.size() != field.size() || a_hat.size() != llr.size()) {
    fail(ErrorKind::InvalidArgument, "vote inputs must have length 2^m");
  }
  return vote_with_partner(llr, a_hat, field.translation_partner(beta));
}

DirectionSet DirectionSet::all(const Field& field) {
  DirectionSet d;
  d.exponents_.resize(field.n());
  std::iota(d.exponents_.begin(), d.exponents_.end(), 0u);
  return d;
}

DirectionSet DirectionSet::random(const Field& field, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > field.n()) {
    fail(ErrorKind::InvalidArgument, "direction count must be in 1.." + std::to_string(field.n()));
  }
  std::vector<std::uint32_t> pool(field.n());
  std::iota(pool.begin(), pool.end(), 0u);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return from_exponents(field, std::move(pool));
}

DirectionSet DirectionSet::from_exponents(const Field& field, std::vector<std::uint32_t> exponents) {
  for (auto e : exponents)
    if (e >= field.n()) fail(ErrorKind::InvalidArgument, "direction exponent out of range");
  std::sort(exponents.begin(), exponents.end());
  if (std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end()) {
    fail(ErrorKind::InvalidArgument, "duplicate direction");
  }
  DirectionSet d;
  d.exponents_ = std::move(exponents);
  return d;
}

DirectionSet DirectionSet::parse(const std::string& text, const Field& field) {
  if (text == "all") return all(field);
  if (text.rfind("k:", 0) == 0) {
    const auto colon = text.find(':', 2);
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        const auto k = std::stoull(text.substr(2, colon - 2), &used);
        if (used == colon - 2) {
          const auto seed_text = text.substr(colon + 1);
          const auto seed = std::stoull(seed_text, &used);
          if (used == seed_text.size()) return random(field, static_cast<std::size_t>(k), seed);
        }
      } catch (const std::logic_error&) {
        // fall through to the error below
      }
    }
  }
  fail(ErrorKind::ParseError, "directions must be 'all' or 'k:<count>:<seed>', got '" + text + "'");
}

bool DirectionSet::contains_exponent(std::uint32_t e) const {
  return std::binary_search(exponents_.begin(), exponents_.end(), e);
}

DecodeReport dd_decode_cyclic(std::span<const double> llr, const CyclicCode& code, const SoftDecoder& dd_decoder,
                              const DirectionSet& directions, unsigned max_iterations) {
  return dd_decode_cyclic(
      llr, code, [&dd_decoder](std::uint32_t) -> const SoftDecoder& { return dd_decoder; }, directions,
      max_iterations);
}

DecodeReport dd_decode_cyclic(std::span<const double> llr, const CyclicCode& code,
                              const DescendantDecoderFor& decoder_for, const DirectionSet& directions,
                              unsigned max_iterations) {
  check_input(llr, code, directions, max_iterations);
  const Field& field = code.field();
  std::vector<std::vector<std::uint32_t>> partners;
  partners.reserve(directions.size());
  for (auto e : directions.exponents()) partners.push_back(field.translation_partner(field.alpha_pow(e)));

  return vote_loop(llr, code, directions, max_iterations,
                   [&](const LlrVector& current, std::size_t d, DecodeResult& inner) {
                     const auto& partner = partners[d];
                     const auto derived = combine_pairs(current, partner);
                     inner = decoder_for(directions.exponents()[d]).decode(derived);
                     return vote_with_partner(current, inner.bits, partner);
                   });
}

DecodeReport dd_decode_minimal(std::span<const double> llr, const CyclicCode& code, const SoftDecoder& mdd_decoder,
                               const DirectionSet& directions, unsigned max_iterations) {
  check_input(llr, code, directions, max_iterations);
  const auto partner = code.field().translation_partner(code.field().one());
  return vote_loop(llr, code, directions, max_iterations,
                   [&](const LlrVector& current, std::size_t d, DecodeResult& inner) {
                     const std::int64_t b = directions.exponents()[d];
                     const auto shifted = shift_llr(current, b);
                     const auto derived = combine_pairs(shifted, partner);
                     inner = mdd_decoder.decode(derived);
                     return shift_llr(vote_with_partner(shifted, inner.bits, partner), -b);
                   });
}

PairFoldedDecoder::PairFoldedDecoder(std::shared_ptr<const SoftDecoder> inner, const Field& field, FieldElement beta)
    : inner_(std::move(inner)), transversal_(pair_transversal(field, beta)), partner_(field.translation_partner(beta)) {
  if (!inner_ || inner_->length() != transversal_.size()) {
    fail(ErrorKind::InvalidArgument, "folded decoder must have length 2^(m-1)");
  }
}

DecodeResult PairFoldedDecoder::decode(std::span<const double> llr) const {
  if (llr.size() != partner_.size()) fail(ErrorKind::InvalidArgument, "LLR length must be 2^m");
  LlrVector folded(transversal_.size());
  for (std::size_t t = 0; t < transversal_.size(); ++t) folded[t] = llr[transversal_[t]];
  auto result = inner_->decode(folded);
  BitVector bits(partner_.size(), 0);
  for (std::size_t t = 0; t < transversal_.size(); ++t) {
    bits[transversal_[t]] = result.bits[t];
    bits[partner_[transversal_[t]]] = result.bits[t];
  }
  result.bits = std::move(bits);
  return result;
}

BinaryMatrix fold_generator(const BinaryMatrix& generator, const Field& field, FieldElement beta) {
  if (generator.cols() != field.size()) fail(ErrorKind::InvalidArgument, "generator length must be 2^m");
  return generator.select_columns(pair_transversal(field, beta));
}

std::uint64_t flop_account(double avg_iterations, std::uint64_t n, std::uint64_t directions, double omega) {
  const double b = static_cast<double>(directions);
  const double per_iteration = 5.0 * b * static_cast<double>(n) + b * omega;
  return static_cast<std::uint64_t>(std::llround(avg_iterations * per_iteration));
}

}  // namespace cyclicdd
