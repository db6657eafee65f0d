#include "cyclicdd/gf2m.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

std::uint32_t default_primitive_polynomial(unsigned m) {
  static constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kTable = {
      0,       0,
      0x7,      // x^2+x+1
      0xB,      // x^3+x+1
      0x13,     // x^4+x+1
      0x25,     // x^5+x^2+1
      0x43,     // x^6+x+1
      0x89,     // x^7+x^3+1
      0x11D,    // x^8+x^4+x^3+x^2+1
      0x211,    // x^9+x^4+1
      0x409,    // x^10+x^3+1
      0x805,    // x^11+x^2+1
      0x1053,   // x^12+x^6+x^4+x+1
      0x201B,   // x^13+x^4+x^3+x+1
      0x4443,   // x^14+x^10+x^6+x+1
      0x8003,   // x^15+x+1
      0x1100B,  // x^16+x^12+x^3+x+1
  };
  if (m < kMinFieldDegree || m > kMaxFieldDegree) {
    fail(ErrorKind::InvalidArgument, "field degree m=" + std::to_string(m) + " outside [2,16]");
  }
  return kTable[m];
}

Field::Field(FieldSpec spec) : spec_(spec) {
  const unsigned m = spec.m;
  if (m < kMinFieldDegree || m > kMaxFieldDegree) {
    fail(ErrorKind::InvalidArgument, "field degree m=" + std::to_string(m) + " outside [2,16]");
  }
  if (std::bit_width(spec.prim_poly) != m + 1) {
    fail(ErrorKind::InvalidArgument, "primitive polynomial must have degree exactly m");
  }
  n_ = (1u << m) - 1;
  log_.assign(std::size_t{n_} + 1, kZeroLog);
  antilog_.assign(n_, 0);

  std::uint32_t v = 1;
  for (std::uint32_t e = 0; e < n_; ++e) {
    if (log_[v] != kZeroLog) {
      fail(ErrorKind::NonPrimitivePolynomial,
           "x has order " + std::to_string(e) + " < " + std::to_string(n_));
    }
    antilog_[e] = v;
    log_[v] = e;
    v <<= 1;
    if (v >> m) v ^= spec.prim_poly;
  }
  if (v != 1) fail(ErrorKind::NonPrimitivePolynomial, "polynomial is reducible");
}

FieldElement Field::alpha_pow(std::int64_t e) const noexcept {
  auto r = e % static_cast<std::int64_t>(n_);
  if (r < 0) r += n_;
  return FieldElement{antilog_[static_cast<std::size_t>(r)]};
}

FieldElement Field::mul(FieldElement x, FieldElement y) const noexcept {
  if (x.is_zero() || y.is_zero()) return zero();
  std::uint32_t e = log_[x.value()] + log_[y.value()];
  if (e >= n_) e -= n_;
  return FieldElement{antilog_[e]};
}

FieldElement Field::inv(FieldElement x) const {
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t e = log_[x.value()];
  return FieldElement{antilog_[e == 0 ? 0 : n_ - e]};
}

FieldElement Field::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement Field::pow(FieldElement x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  return alpha_pow(static_cast<std::int64_t>(log_[x.value()]) * (e % static_cast<std::int64_t>(n_)));
}

FieldElement Field::trace(FieldElement x, unsigned ms) const {
  if (ms == 0 || spec_.m % ms != 0) {
    fail(ErrorKind::InvalidSubfield,
         std::to_string(ms) + " does not divide m=" + std::to_string(spec_.m));
  }
  FieldElement acc = zero();
  FieldElement term = x;
  for (unsigned j = 0; j < ms; ++j) {
    acc = add(acc, term);
    term = mul(term, term);
  }
  return acc;
}

std::vector<FieldElement> Field::subfield(unsigned s) const {
  if (s == 0 || spec_.m % s != 0) {
    fail(ErrorKind::InvalidSubfield,
         std::to_string(s) + " does not divide m=" + std::to_string(spec_.m));
  }
  const std::uint32_t step = n_ / ((1u << s) - 1);
  std::vector<FieldElement> out{zero()};
  for (std::uint32_t e = 0; e < n_; e += step) out.push_back(antilog(e));
  return out;
}

std::vector<std::uint32_t> Field::translation_partner(FieldElement beta) const {
  std::vector<std::uint32_t> partner(size());
  for (std::size_t p = 0; p < partner.size(); ++p) {
    partner[p] = static_cast<std::uint32_t>(position(add(element_at(p), beta)));
  }
  return partner;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n) {
  if (n == 0 || s >= n) fail(ErrorKind::InvalidArgument, "coset element outside [n]");
  std::vector<std::uint32_t> coset;
  std::uint32_t x = s;
  do {
    coset.push_back(x);
    x = static_cast<std::uint32_t>((std::uint64_t{x} * 2) % n);
  } while (x != s);
  std::sort(coset.begin(), coset.end());
  return coset;
}

std::vector<std::uint32_t> coset_closure(std::span<const std::uint32_t> set, std::uint32_t n) {
  std::vector<bool> in(n, false);
  for (auto s : set) {
    if (s >= n) fail(ErrorKind::InvalidArgument, "set element outside [n]");
    if (in[s]) continue;
    for (auto x : cyclotomic_coset(s, n)) in[x] = true;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < n; ++j)
    if (in[j]) out.push_back(j);
  return out;
}

std::vector<std::uint32_t> coset_representatives(std::span<const std::uint32_t> set, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (auto s : set) out.push_back(cyclotomic_coset(s, n).front());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> all_coset_representatives(std::uint32_t n) {
  std::vector<std::uint32_t> reps;
  std::vector<bool> seen(n, false);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    reps.push_back(s);
    for (auto x : cyclotomic_coset(s, n)) seen[x] = true;
  }
  return reps;
}

}  // namespace cyclicdd
