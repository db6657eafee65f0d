#pragma once

// Derivatives of codewords, A(z + beta) - A(z), and the exponent-set calculus
// for the codes they generate: cyclic derivative descendants, cyclic
// derivative ascendants and per-direction minimal descendants.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclicdd/bit_matrix.hpp"
#include "cyclicdd/code.hpp"
#include "cyclicdd/gf2m.hpp"

namespace cyclicdd {

/// P(s): integers whose binary support is a proper subset of that of s.
/// Sorted; empty for s = 0.
std::vector<std::uint32_t> covered_set(std::uint32_t s);

/// Exponent set of the smallest extended cyclic code containing every
/// derivative of every codeword. Independent of the direction.
ExponentSet cyclic_dd(const ExponentSet& set);

/// Largest exponent set whose descendant lies inside `set`:
/// {s : cc(P(s)) is a subset of set}.
ExponentSet cyclic_da(const ExponentSet& set);

/// Output position of element x holds a[x + beta] xor a[x]. Throws ZeroDirection.
BitVector derivative_codeword(std::span<const std::uint8_t> word, FieldElement beta, const Field& field);

struct MinimalDdBasis {
  FieldElement direction;
  BinaryMatrix basis;  ///< RREF, full row rank

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.rows(); }
};

/// Row space of the derivatives (in direction beta) of the rows of G.
MinimalDdBasis minimal_dd_basis(const CyclicCode& code, FieldElement beta);

/// Checks that the b-cyclic shift of the derivative in alpha^b equals the
/// derivative in alpha^0 of the b-cyclic shift.
bool check_equivalence_shift(std::span<const std::uint8_t> word, std::int64_t b, const Field& field);

/// Positions of T = {beta * t : t in span(alpha^1..alpha^(m-1))}, ordered by the
/// coordinate vector (z_1..z_(m-1)) of t read as an integer (z_1 = bit 0).
/// Every pair {x, x + beta} has exactly one member in T.
std::vector<std::uint32_t> pair_transversal(const Field& field, FieldElement beta);

/// Derivative restricted to pair_transversal(beta). For a word of RM(r, m) the
/// result, with entry t placed at the element of GF(2^(m-1)) whose vector form
/// is t, is a word of RM(r - 1, m - 1).
BitVector rm_projection(std::span<const std::uint8_t> word, FieldElement beta, const Field& field);

/// sum_{i=0}^{t} C(m, i); used by the dimension bounds below.
std::uint64_t binomial_prefix_sum(unsigned m, int t);
/// |cyclic_dd(S)| <= sum_{i < deg(S)} C(m, i).
std::uint64_t dd_dimension_bound(const ExponentSet& set, unsigned m);
/// |cyclic_da(S)| <= sum_{i <= deg(S) + 1} C(m, i).
std::uint64_t da_dimension_bound(const ExponentSet& set, unsigned m);

}  // namespace cyclicdd
