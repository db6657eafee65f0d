#include <benchmark/benchmark.h>

#include <random>

#include "cyclicdd/channel.hpp"
#include "cyclicdd/ddcodec.hpp"
#include "cyclicdd/derivative.hpp"
#include "cyclicdd/pipeline.hpp"

using namespace cyclicdd;

namespace {

std::vector<LlrVector> noisy_frames(const CyclicCode& code, double ebn0, std::size_t count) {
  std::mt19937_64 rng(1);
  const ChannelConfig channel{ebn0, code.rate()};
  std::vector<LlrVector> frames;
  const BitVector zero(code.length(), 0);
  for (std::size_t i = 0; i < count; ++i) frames.push_back(transmit(zero, channel, rng));
  return frames;
}

void decode_frames(benchmark::State& state, const std::string& spec, DecoderSettings settings, double ebn0) {
  const auto code = parse_code_spec(spec);
  const FrameDecoder decoder(code, settings);
  const auto frames = noisy_frames(code, ebn0, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoder.decode(frames[i++ % frames.size()]));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

void BM_DerivativeLlr(benchmark::State& state) {
  const Field field = Field::with_degree(static_cast<unsigned>(state.range(0)));
  const auto code = CyclicCode::from_exponent_set(std::make_shared<const Field>(field.spec()),
                                                  bch_exponent_set(field.spec().m, 5));
  const auto llr = noisy_frames(code, 3.0, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(derivative_llr(llr, field.one(), field));
}
BENCHMARK(BM_DerivativeLlr)->Arg(6)->Arg(8);

void BM_Mld_16_7(benchmark::State& state) { decode_frames(state, "16:0x1D1", {.algorithm = Algorithm::Mld}, 3.0); }
BENCHMARK(BM_Mld_16_7);

void BM_DdMld_16_7(benchmark::State& state) { decode_frames(state, "16:0x1D1", {.algorithm = Algorithm::DdMld}, 3.0); }
BENCHMARK(BM_DdMld_16_7);

void BM_Spa_64_45(benchmark::State& state) {
  decode_frames(state, "64:0x782CF", {.algorithm = Algorithm::Spa}, 4.0);
}
BENCHMARK(BM_Spa_64_45);

void BM_DdSpa_64_45(benchmark::State& state) {
  decode_frames(state, "64:0x782CF", {.algorithm = Algorithm::DdSpa, .hmatrix = "dual-orbit:8"}, 4.0);
}
BENCHMARK(BM_DdSpa_64_45);

void BM_Osd_128_36(benchmark::State& state) {
  decode_frames(state, "bch:128:31", {.algorithm = Algorithm::Osd, .osd_order = static_cast<unsigned>(state.range(0))},
                3.0);
}
BENCHMARK(BM_Osd_128_36)->Arg(1)->Arg(2)->Arg(3);

void BM_DdOsdMinimal_128_36(benchmark::State& state) {
  decode_frames(state, "bch:128:31",
                {.algorithm = Algorithm::DdOsd, .directions = "k:32:7", .dd_max_iterations = 4, .minimal = true}, 3.0);
}
BENCHMARK(BM_DdOsdMinimal_128_36);

}  // namespace

BENCHMARK_MAIN();
