#include <algorithm>
#include <numeric>

#include "cyclicdd/error.hpp"
#include "cyclicdd/gf2m.hpp"
#include "doctest.h"

using namespace cyclicdd;

TEST_CASE("field tables for x^4 + x + 1") {
  const Field f(FieldSpec{4, 0x13});
  CHECK(f.n() == 15);
  CHECK(f.size() == 16);
  CHECK(f.antilog(4).value() == 0b0011);
  CHECK(f.alpha_pow(15) == f.one());
  CHECK(f.alpha_pow(-1) == f.alpha_pow(14));
  CHECK(f.log(f.zero()) == Field::kZeroLog);
  for (std::uint32_t v = 1; v < 16; ++v) CHECK(f.antilog(f.log(FieldElement{v})).value() == v);
}

TEST_CASE("non-primitive and malformed polynomials are rejected") {
  try {
    Field f(FieldSpec{4, 0x1F});
    FAIL("expected NonPrimitivePolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPrimitivePolynomial);
  }
  CHECK_THROWS_AS(Field(FieldSpec{4, 0x25}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{1, 0x3}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{17, 0x3}), Error);
}

TEST_CASE("default polynomials are primitive for every supported degree") {
  for (unsigned m = kMinFieldDegree; m <= kMaxFieldDegree; ++m) {
    CAPTURE(m);
    CHECK_NOTHROW(Field::with_degree(m));
  }
  CHECK(default_primitive_polynomial(4) == 0x13);
  CHECK(default_primitive_polynomial(6) == 0x43);
  CHECK(default_primitive_polynomial(8) == 0x11D);
}

TEST_CASE("field arithmetic") {
  const auto f = Field::with_degree(4);
  const auto a3 = f.alpha_pow(3);
  CHECK(Field::add(a3, a3) == f.zero());
  CHECK(f.mul(a3, f.alpha_pow(13)) == f.alpha_pow(1));
  for (std::int64_t e = 0; e < 15; ++e) CHECK(f.mul(f.alpha_pow(e), f.zero()) == f.zero());
  try {
    (void)f.inv(f.zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 3) == f.zero());
  CHECK(f.pow(a3, 5) == f.one());
  CHECK(f.div(a3, f.alpha_pow(5)) == f.alpha_pow(13));
}

TEST_CASE("inverse and Frobenius identities hold in several fields") {
  for (unsigned m : {2u, 4u, 6u, 8u}) {
    const auto f = Field::with_degree(m);
    for (std::uint32_t x = 1; x < f.size(); ++x) CHECK(f.mul(FieldElement{x}, f.inv(FieldElement{x})) == f.one());
    for (std::uint32_t x = 0; x < f.size(); x += (m > 6 ? 7 : 1))
      for (std::uint32_t y = 0; y < f.size(); y += (m > 6 ? 5 : 1)) {
        const FieldElement a{x}, b{y};
        const auto s = Field::add(a, b);
        CHECK(f.mul(s, s) == Field::add(f.mul(a, a), f.mul(b, b)));
      }
  }
}

TEST_CASE("traces") {
  const auto f = Field::with_degree(4);
  unsigned zeros = 0;
  for (std::uint32_t v = 0; v < 16; ++v) {
    const FieldElement x{v};
    CHECK(f.trace(x, 1) == x);
    const auto t = f.trace(x, 4);
    CHECK(t.value() <= 1);
    zeros += t.is_zero();
    CHECK(f.trace(f.mul(x, x), 4) == t);
    CHECK(f.trace(x, 2) == Field::add(x, f.mul(x, x)));
  }
  CHECK(zeros == 8);
  CHECK_THROWS_AS((void)f.trace(f.one(), 3), Error);
  const auto gf4 = f.subfield(2);
  REQUIRE(gf4.size() == 4);
  CHECK(gf4[0] == f.zero());
  CHECK(gf4[1] == f.one());
  CHECK(gf4[2] == f.alpha_pow(5));
  CHECK(gf4[3] == f.alpha_pow(10));
}

TEST_CASE("cyclotomic cosets") {
  using V = std::vector<std::uint32_t>;
  CHECK(cyclotomic_coset(1, 15) == V{1, 2, 4, 8});
  CHECK(cyclotomic_coset(5, 15) == V{5, 10});
  CHECK(cyclotomic_coset(0, 15) == V{0});
  const V s{0, 1, 2, 4, 8, 5, 10};
  CHECK(coset_representatives(s, 15) == V{0, 1, 5});
  CHECK(coset_representatives(V{}, 15).empty());
  CHECK(coset_closure(V{}, 15).empty());
  CHECK(coset_closure(V{3}, 63) == V{3, 6, 12, 24, 33, 48});
  CHECK(coset_representatives(V{3}, 63) == V{3});
}

TEST_CASE("cosets partition [n] and closure is idempotent") {
  for (unsigned m = 2; m <= 10; ++m) {
    const std::uint32_t n = (1u << m) - 1;
    std::size_t total = 0;
    std::vector<int> seen(n, 0);
    for (auto r : all_coset_representatives(n)) {
      const auto c = cyclotomic_coset(r, n);
      CHECK(m % c.size() == 0);
      CHECK(c.front() == r);
      for (auto x : c) seen[x]++;
      total += c.size();
    }
    CHECK(total == n);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    const std::vector<std::uint32_t> some{1, 3 % n, n - 1};
    const auto once = coset_closure(some, n);
    CHECK(coset_closure(once, n) == once);
  }
}
