#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/code.hpp"
#include "cyclicdd/gf2m.hpp"

namespace testsupport {

using namespace cyclicdd;

inline std::shared_ptr<const Field> field_of(unsigned m) {
  return std::make_shared<const Field>(FieldSpec::with_default_polynomial(m));
}

// g(x) = 1 + x^4 + x^6 + x^7 + x^8
inline constexpr const char* kG16x7 = "0x1D1";
inline constexpr const char* kG64x24 = "0xF69AC20921";
inline constexpr const char* kG64x45 = "0x782CF";
inline constexpr const char* kG256x175 = "0x11377F7700FA55335BA55";
inline constexpr const char* kG256x191 = "0x19ACCC1AE68A0CEFF";

inline CyclicCode code_16_7() { return CyclicCode::from_generator(field_of(4), Gf2Poly::from_hex(kG16x7)); }

inline BitVector bits(const std::string& text) {
  BitVector v;
  for (char c : text)
    if (c == '0' || c == '1') v.push_back(static_cast<std::uint8_t>(c - '0'));
  return v;
}

inline const char* kExample3G =
    "1100010111000000\n"
    "1010001011100000\n"
    "1001000101110000\n"
    "1000100010111000\n"
    "1000010001011100\n"
    "1000001000101110\n"
    "1000000100010111\n";

inline const char* kExample3Derivatives =
    "0011010111100010\n"
    "1111011001010000\n"
    "1100001110110010\n"
    "1100101000011101\n"
    "1111011001010000\n"
    "1100001110110010\n"
    "1100101000011101\n";

inline const char* kExample3MinimalBasis =
    "1100001110110010\n"
    "0011010111100010\n"
    "0000100110101111\n";

inline BitVector random_message(std::size_t k, std::mt19937_64& rng) {
  BitVector m(k);
  for (auto& b : m) b = static_cast<std::uint8_t>(rng() & 1u);
  return m;
}

inline BitVector random_codeword(const CyclicCode& code, std::mt19937_64& rng) {
  return code.encode(random_message(code.dimension(), rng));
}

inline BitVector xor_of(const BitVector& a, const BitVector& b) {
  BitVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] ^ b[i];
  return c;
}

inline std::size_t weight(const BitVector& a) {
  std::size_t w = 0;
  for (auto b : a) w += b;
  return w;
}

// Random conjugacy-closed subset of [n]: each coset kept with probability 1/2.
inline ExponentSet random_exponent_set(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> members;
  for (auto r : all_coset_representatives(n)) {
    if (rng() & 1u) {
      auto c = cyclotomic_coset(r, n);
      members.insert(members.end(), c.begin(), c.end());
    }
  }
  return ExponentSet(n, std::move(members));
}

}  // namespace testsupport
