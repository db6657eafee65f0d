#pragma once

// Text specifications for codes, parity-check matrices and decoders, and the
// frame decoder that ties them together for the CLI and the simulator.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "cyclicdd/code.hpp"
#include "cyclicdd/ddcodec.hpp"
#include "cyclicdd/decoders.hpp"
#include "cyclicdd/parity_matrix.hpp"

namespace cyclicdd {

/// Field degree for a length given either as 2^m or as 2^m - 1.
unsigned degree_for_length(std::uint64_t n);

/// Code specifications:
///   <n>:<hex>        generator polynomial of the length 2^m - 1 cyclic code
///                    (n may be 2^m or 2^m - 1)
///   bch:<n>:<delta>  narrow-sense BCH with designed distance delta
///   rm:<r>:<m>       Reed-Muller RM(r, m)
/// prim_poly = 0 selects the default primitive polynomial.
CyclicCode parse_code_spec(const std::string& spec, std::uint32_t prim_poly = 0);

/// Parity-check specifications for a code with generator `generator`:
///   eg:<mu>:<s>      lines of EG(mu, 2^s)
///   dual-orbit:<w>   dual codewords of weight <= w
///   alist:<path>     file
///   auto             smallest full-rank dual-orbit matrix
/// Every result is checked against `generator`; a non-orthogonal matrix throws InvalidArgument.
SparseParityMatrix parse_parity_spec(const std::string& spec, const BinaryMatrix& generator, const Field& field);

enum class Algorithm { DdSpa, DdOsd, DdMld, Spa, Osd, Mld };

std::string_view to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view text);

[[nodiscard]] inline bool is_derivative(Algorithm a) noexcept {
  return a == Algorithm::DdSpa || a == Algorithm::DdOsd || a == Algorithm::DdMld;
}

struct DecoderSettings {
  Algorithm algorithm = Algorithm::DdSpa;
  std::string directions = "all";
  /// Derivative-decoding iterations.
  unsigned dd_max_iterations = 3;
  /// SPA iterations (inner or stand-alone).
  unsigned spa_max_iterations = 20;
  unsigned osd_order = 1;
  /// Parity-check spec for SPA (of the descendant for dd-spa).
  std::string hmatrix = "auto";
  /// Decode the minimal descendant in direction 1 with cyclic shifts instead of
  /// the cyclic descendant. OSD and MLD then run on the half-length folded code.
  bool minimal = false;

  friend bool operator==(const DecoderSettings&, const DecoderSettings&) = default;
};

/// Whole-frame decoder for one code. Immutable after construction.
class FrameDecoder {
 public:
  FrameDecoder(const CyclicCode& code, const DecoderSettings& settings);

  [[nodiscard]] DecodeReport decode(std::span<const double> llr) const;
  [[nodiscard]] const CyclicCode& code() const noexcept { return code_; }
  [[nodiscard]] const DecoderSettings& settings() const noexcept { return settings_; }
  [[nodiscard]] const DirectionSet& directions() const noexcept { return directions_; }
  /// Generator of the code the inner decoder works on (the descendant for
  /// derivative algorithms, the code itself otherwise).
  [[nodiscard]] const BinaryMatrix& inner_generator() const noexcept { return inner_generator_; }
  [[nodiscard]] const SoftDecoder& inner_decoder() const noexcept { return *inner_; }

 private:
  CyclicCode code_;
  DecoderSettings settings_;
  DirectionSet directions_;
  BinaryMatrix inner_generator_;
  std::shared_ptr<const SoftDecoder> inner_;
};

}  // namespace cyclicdd
