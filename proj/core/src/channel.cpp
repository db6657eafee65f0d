#include "cyclicdd/channel.hpp"

#include <cmath>

#include "cyclicdd/error.hpp"

namespace cyclicdd {

double ChannelConfig::noise_variance() const {
  if (!(rate > 0.0) || !std::isfinite(ebn0_db)) fail(ErrorKind::InvalidArgument, "channel needs rate > 0 and finite Eb/N0");
  return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

LlrVector transmit(std::span<const std::uint8_t> codeword, const ChannelConfig& channel, std::mt19937_64& rng) {
  const double sigma2 = channel.noise_variance();
  std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
  LlrVector llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const double y = (codeword[i] ? -1.0 : 1.0) + noise(rng);
    llr[i] = 2.0 * y / sigma2;
  }
  return llr;
}

LlrVector transmit_noiseless(std::span<const std::uint8_t> codeword, const ChannelConfig& channel) {
  const double scale = 2.0 / channel.noise_variance();
  LlrVector llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) llr[i] = codeword[i] ? -scale : scale;
  return llr;
}

}  // namespace cyclicdd
