#include <cmath>
#include <random>

#include "cyclicdd/channel.hpp"
#include "cyclicdd/ddcodec.hpp"
#include "cyclicdd/derivative.hpp"
#include "cyclicdd/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyclicdd;
using namespace testsupport;

namespace {

CyclicCode dd_of(const CyclicCode& code) {
  return CyclicCode::from_exponent_set(code.field_ptr(), cyclic_dd(code.exponents()));
}

LlrVector signs(const BitVector& c, double magnitude) {
  LlrVector l(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) l[i] = c[i] ? -magnitude : magnitude;
  return l;
}

// Reports a fixed flop count and iteration number; decodes to all zeros.
class FixedCostDecoder final : public SoftDecoder {
 public:
  FixedCostDecoder(std::size_t n, double flops) : n_(n), flops_(flops) {}
  std::size_t length() const override { return n_; }
  DecodeResult decode(std::span<const double>) const override {
    return DecodeResult{BitVector(n_, 0), true, 1, flops_};
  }

 private:
  std::size_t n_;
  double flops_;
};

// Minimal-descendant MLD decoders for every direction, indexed by exponent.
std::vector<std::unique_ptr<MldDecoder>> per_direction_minimal_mld(const CyclicCode& code) {
  std::vector<std::unique_ptr<MldDecoder>> out;
  for (std::uint32_t e = 0; e < code.field().n(); ++e)
    out.push_back(std::make_unique<MldDecoder>(minimal_dd_basis(code, code.field().alpha_pow(e)).basis));
  return out;
}

}  // namespace

TEST_CASE("derivative LLR examples") {
  const auto f = Field::with_degree(4);
  const auto beta = f.alpha_pow(3);
  const auto partner = f.translation_partner(beta);
  LlrVector l(16, 5.0);
  l[0] = 1e6;
  l[partner[0]] = -1e6;
  l[7] = 0.0;
  l[2] = 2.0;
  l[partner[2]] = 2.0;
  REQUIRE(partner[2] != 7);
  REQUIRE(partner[0] != 2);
  const auto d = derivative_llr(l, beta, f);
  CHECK(d[0] == doctest::Approx(-(30.0 - std::log(2.0))).epsilon(1e-12));
  CHECK(d[7] == 0.0);
  CHECK(d[partner[7]] == 0.0);
  CHECK(d[2] == doctest::Approx(1.32500274735786).epsilon(1e-12));
  try {
    (void)derivative_llr(l, f.zero(), f);
    FAIL("expected ZeroDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDirection);
  }
}

TEST_CASE("derivative LLR invariants") {
  const auto f = Field::with_degree(6);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 4.0);
  for (int t = 0; t < 1000; ++t) {
    LlrVector l(64);
    for (auto& x : l) x = g(rng);
    const auto beta = FieldElement{static_cast<std::uint32_t>(1 + rng() % 63)};
    const auto partner = f.translation_partner(beta);
    const auto d = derivative_llr(l, beta, f);
    for (std::size_t p = 0; p < 64; ++p) {
      CHECK(d[p] == d[partner[p]]);
      if (l[p] != 0.0 && l[partner[p]] != 0.0) CHECK(std::signbit(d[p]) == (std::signbit(l[p]) != std::signbit(l[partner[p]])));
    }
    // Saturation: the sign of the combined LLR is the XOR of the hard decisions.
    LlrVector big(64);
    for (std::size_t p = 0; p < 64; ++p) big[p] = l[p] < 0 ? -1e4 : 1e4;
    const auto ds = derivative_llr(big, beta, f);
    for (std::size_t p = 0; p < 64; ++p) CHECK((ds[p] < 0) == ((l[p] < 0) != (l[partner[p]] < 0)));
  }
}

TEST_CASE("votes") {
  const auto f = Field::with_degree(4);
  const auto beta = f.alpha_pow(6);
  const auto partner = f.translation_partner(beta);
  LlrVector l(16);
  for (std::size_t i = 0; i < 16; ++i) l[i] = static_cast<double>(i) - 7.5;
  const auto zero_vote = get_vote(l, BitVector(16, 0), beta, f);
  const auto ones_vote = get_vote(l, BitVector(16, 1), beta, f);
  for (std::size_t p = 0; p < 16; ++p) {
    CHECK(zero_vote[p] == l[partner[p]]);
    CHECK(ones_vote[p] == -l[partner[p]]);
  }

  const auto code = code_16_7();
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_codeword(code, rng);
    const auto noiseless = signs(c, 3.0);
    LlrVector avg(16, 0.0);
    for (std::uint32_t e = 0; e < 15; ++e) {
      const auto b = f.alpha_pow(e);
      const auto v = get_vote(noiseless, derivative_codeword(c, b, f), b, f);
      for (std::size_t p = 0; p < 16; ++p) avg[p] += v[p] / 15.0;
    }
    for (std::size_t p = 0; p < 16; ++p) CHECK((avg[p] < 0) == (c[p] == 1));
  }
}

TEST_CASE("direction sets") {
  const auto f = Field::with_degree(6);
  CHECK(DirectionSet::all(f).size() == 63);
  const auto r = DirectionSet::random(f, 16, 99);
  CHECK(r.size() == 16);
  CHECK(std::is_sorted(r.exponents().begin(), r.exponents().end()));
  CHECK(std::adjacent_find(r.exponents().begin(), r.exponents().end()) == r.exponents().end());
  CHECK(DirectionSet::random(f, 16, 99).exponents() == r.exponents());
  CHECK(DirectionSet::parse("k:16:99", f).exponents() == r.exponents());
  CHECK(DirectionSet::parse("all", f).size() == 63);
  CHECK_THROWS_AS(DirectionSet::parse("k:16", f), Error);
  CHECK_THROWS_AS(DirectionSet::parse("k:0:1", f), Error);
  CHECK_THROWS_AS(DirectionSet::from_exponents(f, {1, 1}), Error);
}

TEST_CASE("derivative decoding of noiseless frames takes one iteration") {
  const auto code = code_16_7();
  const auto dd = dd_of(code);
  const MldDecoder dd_mld(dd.generator_matrix());
  const MldDecoder mdd_mld(minimal_dd_basis(code, code.field().one()).basis);
  const auto all = DirectionSet::all(code.field());
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_codeword(code, rng);
    const auto l = signs(c, 4.0);
    const auto r1 = dd_decode_cyclic(l, code, dd_mld, all, 4);
    CHECK(r1.codeword == c);
    CHECK(r1.converged);
    CHECK(r1.iterations == 1);
    const auto r2 = dd_decode_minimal(l, code, mdd_mld, all, 4);
    CHECK(r2.codeword == r1.codeword);
    CHECK(r2.iterations == 1);
  }

  const auto f6 = field_of(6);
  const auto code45 = CyclicCode::from_generator(f6, Gf2Poly::from_hex(kG64x45));
  const SpaDecoder spa(dual_orbit_parity_matrix(dd_of(code45).generator_matrix(), 8), 20);
  const auto c = random_codeword(code45, rng);
  const auto r = dd_decode_cyclic(signs(c, 10.0), code45, spa, DirectionSet::all(*f6), 3);
  CHECK(r.codeword == c);
  CHECK(r.iterations == 1);
  CHECK(r.inner_calls == 63);
  CHECK(r.inner_iterations == 63);
}

TEST_CASE("two weak errors on the (16,7) code are corrected") {
  const auto code = code_16_7();
  const MldDecoder dd_mld(dd_of(code).generator_matrix());
  const auto all = DirectionSet::all(code.field());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const auto c = random_codeword(code, rng);
    auto l = signs(c, 4.0);
    const auto p = rng() % 16;
    auto q = rng() % 16;
    while (q == p) q = rng() % 16;
    l[p] = -l[p] / 4.0;
    l[q] = -l[q] / 4.0;
    const auto r = dd_decode_cyclic(l, code, dd_mld, all, 4);
    CHECK(r.codeword == c);
    CHECK(r.converged);
  }
}

TEST_CASE("shifted decoding in direction 1 matches decoding in direction alpha^b") {
  const auto code = code_16_7();
  const auto& f = code.field();
  const auto decoders = per_direction_minimal_mld(code);
  const auto& d1 = *decoders[0];
  std::mt19937_64 rng(14);
  const ChannelConfig ch{2.0, code.rate()};
  for (int t = 0; t < 200; ++t) {
    const auto l = transmit(random_codeword(code, rng), ch, rng);
    const auto b = static_cast<std::uint32_t>(rng() % 15);
    const auto direct = decoders[b]->decode(derivative_llr(l, f.alpha_pow(b), f)).bits;
    BitVector shifted_bits(16);
    LlrVector shifted(16);
    shifted[0] = l[0];
    for (std::size_t i = 0; i < 15; ++i) shifted[1 + i] = l[1 + (i + b) % 15];
    const auto via_one = d1.decode(derivative_llr(shifted, f.one(), f)).bits;
    CHECK(cyclic_shift(direct, b) == via_one);
  }
}

TEST_CASE("minimal-descendant decoding with shifts equals per-direction decoding") {
  const auto code = code_16_7();
  const auto decoders = per_direction_minimal_mld(code);
  const auto all = DirectionSet::all(code.field());
  const DescendantDecoderFor pick = [&](std::uint32_t e) -> const SoftDecoder& { return *decoders[e]; };
  std::mt19937_64 rng(15);
  const ChannelConfig ch{2.0, code.rate()};
  int same = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto c = random_codeword(code, rng);
    const auto l = transmit(c, ch, rng);
    const auto a = dd_decode_cyclic(l, code, pick, all, 4);
    const auto b = dd_decode_minimal(l, code, *decoders[0], all, 4);
    CHECK((a.codeword == c) == (b.codeword == c));
    same += a.codeword == b.codeword && a.iterations == b.iterations;
  }
  CHECK(same == 1000);
}

TEST_CASE("half-length folded decoding equals full-length decoding") {
  const auto code = code_16_7();
  const auto& f = code.field();
  const auto basis = minimal_dd_basis(code, f.one()).basis;
  const MldDecoder full(basis);
  const auto folded_g = fold_generator(basis, f, f.one());
  CHECK(folded_g.rank() == basis.rows());
  const PairFoldedDecoder folded(std::make_shared<MldDecoder>(folded_g), f, f.one());
  CHECK(folded.length() == 16);
  const auto all = DirectionSet::all(f);
  std::mt19937_64 rng(16);
  const ChannelConfig ch{1.5, code.rate()};
  for (int t = 0; t < 1000; ++t) {
    const auto l = transmit(random_codeword(code, rng), ch, rng);
    const auto dl = derivative_llr(l, f.one(), f);
    CHECK(full.decode(dl).bits == folded.decode(dl).bits);
    CHECK(dd_decode_minimal(l, code, full, all, 4).codeword == dd_decode_minimal(l, code, folded, all, 4).codeword);
  }
}

TEST_CASE("flop accounting") {
  CHECK(flop_account(1.03, 256, 32, 8.0 + 176.0 * 79.0) == 500728);
  CHECK(flop_account(1.02, 256, 255, 8.0 + 176.0 * 79.0) == 3951439);
  CHECK(flop_account(1.0, 64, 63, 0.0) == 20160);
  CHECK(flop_account(2.5, 64, 0, 1234.0) == 0);

  const auto code = code_16_7();
  const double omega = 777.0;
  const FixedCostDecoder stub(16, omega);
  const auto dirs = DirectionSet::random(code.field(), 6, 3);
  std::mt19937_64 rng(17);
  const ChannelConfig ch{0.0, code.rate()};
  for (int t = 0; t < 20; ++t) {
    const auto l = transmit(random_codeword(code, rng), ch, rng);
    const auto r = dd_decode_cyclic(l, code, stub, dirs, 3);
    CHECK(r.flops == static_cast<double>(flop_account(r.iterations, 16, dirs.size(), omega)));
  }
}

TEST_CASE("converged outputs are codewords; shortened codes via an erased parity bit") {
  const auto code = code_16_7();
  const MldDecoder dd_mld(dd_of(code).generator_matrix());
  const auto all = DirectionSet::all(code.field());
  std::mt19937_64 rng(18);
  const ChannelConfig ch{1.0, code.rate()};
  const auto cyclic_code_checks = [&](const BitVector& w) {
    // Cyclic part alone: the (15,7) code has spectrum on S_C, checked via the extended code.
    BitVector ext(w);
    unsigned parity = 0;
    for (std::size_t i = 1; i < 16; ++i) parity ^= w[i];
    ext[0] = static_cast<std::uint8_t>(parity);
    return code.is_member(ext);
  };
  for (int t = 0; t < 300; ++t) {
    const auto c = random_codeword(code, rng);
    auto l = transmit(c, ch, rng);
    const auto r = dd_decode_cyclic(l, code, dd_mld, all, 4);
    if (r.converged) CHECK(code.satisfies_checks(r.codeword));
    l[0] = 0.0;
    const auto r0 = dd_decode_cyclic(l, code, dd_mld, all, 4);
    if (r0.converged) CHECK(cyclic_code_checks(r0.codeword));
  }
}
