#pragma once

// Monte-Carlo block error rate estimation and its JSON/CSV plumbing.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclicdd/pipeline.hpp"

namespace cyclicdd {

/// Environment variable consulted for the default worker count.
inline constexpr const char* kWorkersEnv = "CYCLICDD_WORKERS";

struct SimConfig {
  std::string code;
  std::uint32_t prim_poly = 0;
  DecoderSettings decoder;
  std::vector<double> ebn0_db;
  std::uint64_t max_frames = 1000;
  std::uint64_t max_frame_errors = 100;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Transmit the all-zero codeword instead of random messages.
  bool all_zero = false;
  /// Drop the channel noise (the LLRs keep their noisy-channel scale).
  bool noiseless = false;
  /// Frames each worker decodes between stop checks.
  std::uint64_t batch = 32;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Worker count from CYCLICDD_WORKERS, or 1 when unset or invalid.
unsigned default_worker_count();

struct SimPoint {
  double ebn0_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t frame_errors = 0;
  std::uint64_t bit_errors = 0;
  std::uint64_t converged_frames = 0;
  std::uint64_t dd_iterations = 0;
  std::uint64_t inner_calls = 0;
  std::uint64_t inner_iterations = 0;
  double flops = 0.0;

  [[nodiscard]] double bler() const noexcept {
    return frames ? static_cast<double>(frame_errors) / static_cast<double>(frames) : 0.0;
  }
  [[nodiscard]] double avg_dd_iterations() const noexcept {
    return frames ? static_cast<double>(dd_iterations) / static_cast<double>(frames) : 0.0;
  }
  [[nodiscard]] double avg_inner_iterations() const noexcept {
    return inner_calls ? static_cast<double>(inner_iterations) / static_cast<double>(inner_calls) : 0.0;
  }
  [[nodiscard]] double avg_flops() const noexcept { return frames ? flops / static_cast<double>(frames) : 0.0; }

  friend bool operator==(const SimPoint&, const SimPoint&) = default;
};

struct SimResult {
  std::vector<SimPoint> points;
  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Throws ConfigError when the code spec, decoder or numbers are unusable.
SimResult run_monte_carlo(const SimConfig& config);

/// Same, with an already constructed decoder (its code must match the config's).
SimResult run_monte_carlo(const SimConfig& config, const FrameDecoder& decoder);

/// CSV header: ebn0_db,frames,frame_errors,bler,avg_dd_iters,avg_inner_iters,flops_est
void write_results(std::ostream& out, const SimResult& result);
void write_results(const std::filesystem::path& path, const SimResult& result);

/// JSON schema errors name the offending field.
SimConfig parse_config(const std::string& json_text);
SimConfig load_config(const std::filesystem::path& path);
std::string dump_config(const SimConfig& config);
void save_config(const std::filesystem::path& path, const SimConfig& config);

}  // namespace cyclicdd
