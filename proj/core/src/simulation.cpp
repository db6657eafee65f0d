#include "cyclicdd/simulation.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include "cyclicdd/channel.hpp"
#include "cyclicdd/error.hpp"

namespace cyclicdd {

unsigned default_worker_count() {
  const char* env = std::getenv(kWorkersEnv);
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
  return static_cast<unsigned>(v);
}

namespace {

void validate(const SimConfig& config) {
  if (config.max_frames < 1) fail(ErrorKind::ConfigError, "max_frames must be at least 1");
  if (config.max_frame_errors < 1) fail(ErrorKind::ConfigError, "max_frame_errors must be at least 1");
  if (config.workers < 1) fail(ErrorKind::ConfigError, "workers must be at least 1");
  if (config.batch < 1) fail(ErrorKind::ConfigError, "batch must be at least 1");
  if (config.ebn0_db.empty()) fail(ErrorKind::ConfigError, "ebn0_db must list at least one point");
}

struct Worker {
  std::mt19937_64 rng;
  SimPoint subtotal;
};

void run_frames(const FrameDecoder& decoder, const SimConfig& config, const ChannelConfig& channel,
                std::uint64_t frames, Worker& w) {
  const auto& code = decoder.code();
  const std::size_t k = code.dimension();
  BitVector message(k, 0);
  BitVector codeword(code.length(), 0);
  for (std::uint64_t f = 0; f < frames; ++f) {
    if (!config.all_zero) {
      for (std::size_t i = 0; i < k; ++i) message[i] = static_cast<std::uint8_t>(w.rng() >> 63);
      codeword = code.encode(message);
    }
    const auto llr = config.noiseless ? transmit_noiseless(codeword, channel) : transmit(codeword, channel, w.rng);
    const auto report = decoder.decode(llr);
    std::uint64_t wrong = 0;
    for (std::size_t i = 0; i < codeword.size(); ++i) wrong += report.codeword[i] != codeword[i];
    auto& s = w.subtotal;
    s.frames += 1;
    s.frame_errors += wrong ? 1 : 0;
    s.bit_errors += wrong;
    s.converged_frames += report.converged ? 1 : 0;
    s.dd_iterations += report.iterations;
    s.inner_calls += report.inner_calls;
    s.inner_iterations += report.inner_iterations;
    s.flops += report.flops;
  }
}

SimPoint run_point(const SimConfig& config, const FrameDecoder& decoder, std::size_t point_index) {
  const ChannelConfig channel{config.ebn0_db[point_index], decoder.code().rate()};
  std::vector<Worker> workers(config.workers);
  for (unsigned i = 0; i < config.workers; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(point_index), i};
    workers[i].rng.seed(seq);
  }

  SimPoint total;
  total.ebn0_db = channel.ebn0_db;
  std::vector<std::uint64_t> quota(config.workers);
  while (total.frames < config.max_frames && total.frame_errors < config.max_frame_errors) {
    const std::uint64_t remaining = config.max_frames - total.frames;
    for (unsigned i = 0; i < config.workers; ++i) {
      const std::uint64_t before = std::uint64_t{i} * config.batch;
      quota[i] = remaining > before ? std::min(config.batch, remaining - before) : 0;
      workers[i].subtotal = SimPoint{};
    }
    if (config.workers == 1) {
      run_frames(decoder, config, channel, quota[0], workers[0]);
    } else {
      std::vector<std::exception_ptr> errors(config.workers);
      {
        std::vector<std::jthread> threads;
        threads.reserve(config.workers);
        for (unsigned i = 0; i < config.workers; ++i) {
          if (quota[i] == 0) continue;
          threads.emplace_back([&, i] {
            try {
              run_frames(decoder, config, channel, quota[i], workers[i]);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          });
        }
      }
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    // Merge in worker order so the totals do not depend on scheduling.
    for (const auto& w : workers) {
      const auto& s = w.subtotal;
      total.frames += s.frames;
      total.frame_errors += s.frame_errors;
      total.bit_errors += s.bit_errors;
      total.converged_frames += s.converged_frames;
      total.dd_iterations += s.dd_iterations;
      total.inner_calls += s.inner_calls;
      total.inner_iterations += s.inner_iterations;
      total.flops += s.flops;
    }
  }
  return total;
}

}  // namespace

SimResult run_monte_carlo(const SimConfig& config, const FrameDecoder& decoder) {
  validate(config);
  SimResult result;
  for (std::size_t p = 0; p < config.ebn0_db.size(); ++p) result.points.push_back(run_point(config, decoder, p));
  return result;
}

SimResult run_monte_carlo(const SimConfig& config) {
  validate(config);
  std::unique_ptr<FrameDecoder> decoder;
  try {
    decoder = std::make_unique<FrameDecoder>(parse_code_spec(config.code, config.prim_poly), config.decoder);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IoError) throw;
    fail(ErrorKind::ConfigError, std::string("code/decoder pairing rejected: ") + e.what());
  }
  return run_monte_carlo(config, *decoder);
}

void write_results(std::ostream& out, const SimResult& result) {
  out << "ebn0_db,frames,frame_errors,bler,avg_dd_iters,avg_inner_iters,flops_est\n";
  out << std::setprecision(10);
  for (const auto& p : result.points) {
    out << p.ebn0_db << ',' << p.frames << ',' << p.frame_errors << ',' << p.bler() << ',' << p.avg_dd_iterations()
        << ',' << p.avg_inner_iterations() << ',' << p.avg_flops() << '\n';
  }
}

void write_results(const std::filesystem::path& path, const SimResult& result) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  write_results(out, result);
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace cyclicdd
