#pragma once

// BPSK over AWGN: bit 0 -> +1, bit 1 -> -1.

#include <cstdint>
#include <random>
#include <span>

#include "cyclicdd/decoders.hpp"

namespace cyclicdd {

struct ChannelConfig {
  double ebn0_db = 0.0;
  double rate = 1.0;

  /// sigma^2 = 1 / (2 R 10^(Eb/N0 / 10)).
  [[nodiscard]] double noise_variance() const;
};

/// L_i = 2 y_i / sigma^2 with y_i = (1 - 2 a_i) + n_i.
LlrVector transmit(std::span<const std::uint8_t> codeword, const ChannelConfig& channel, std::mt19937_64& rng);

/// The same LLRs with the noise omitted.
LlrVector transmit_noiseless(std::span<const std::uint8_t> codeword, const ChannelConfig& channel);

}  // namespace cyclicdd
