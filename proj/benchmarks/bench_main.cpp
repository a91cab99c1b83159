#include <benchmark/benchmark.h>

#include <random>

#include "streamcode/burst_channel.hpp"
#include "streamcode/vgms.hpp"

using namespace streamcode;

namespace {

void BM_FieldMulAdd(benchmark::State& state) {
  const GaloisField f(FieldSpec::with_degree(static_cast<int>(state.range(0))));
  const std::size_t n = 4096;
  std::mt19937_64 rng(1);
  SymbolVec src(n);
  SymbolVec dst(n);
  for (auto& s : src) s = static_cast<Symbol>(rng() % f.order());
  for (auto _ : state) {
    f.mul_add(7, src.data(), dst.data(), n);
    benchmark::DoNotOptimize(dst.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n * sizeof(Symbol)));
}
BENCHMARK(BM_FieldMulAdd)->Arg(8)->Arg(16);

struct Stream {
  CodeParams params;
  std::vector<MessagePacket> messages;
};

Stream make_stream(int tau, int b, int live) {
  const GaloisField f;
  CodeParams p{tau, b, 0, tau + 1, 8, tau};
  const auto seq = terminate_sequence(random_sizes(live, p.m, 3), p);
  return {with_horizon(p, seq), random_messages(seq, f, 3)};
}

void BM_VgmsEncode(benchmark::State& state) {
  const int tau = static_cast<int>(state.range(0));
  const auto s = make_stream(tau, std::max(1, tau / 2), 200);
  const VgmsCodec codec(s.params, GaloisField(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(codec.encode(s.messages));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.messages.size()));
}
BENCHMARK(BM_VgmsEncode)->Arg(2)->Arg(4)->Arg(8);

void BM_VgmsDecodeBurst(benchmark::State& state) {
  const int tau = static_cast<int>(state.range(0));
  const int b = std::max(1, tau / 2);
  const auto s = make_stream(tau, b, 200);
  const VgmsCodec codec(s.params, GaloisField(), 0);
  const auto x = codec.encode(s.messages);
  std::vector<int> erased;
  for (int i = 0; i < b; ++i) erased.push_back(100 + i);
  const auto rx = streamcode::apply(LossPattern(erased), x);
  const auto sizes = sizes_of(s.messages);
  for (auto _ : state) benchmark::DoNotOptimize(codec.decode(rx, sizes));
}
BENCHMARK(BM_VgmsDecodeBurst)->Arg(2)->Arg(4)->Arg(8);

void BM_FullPatternEnumeration(benchmark::State& state) {
  const CodeParams p{4, 2, 0, 5, 1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    long count = 0;
    for_each_pattern(p, EnumerationMode::kFull, [&](const LossPattern&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_FullPatternEnumeration)->Arg(11)->Arg(17);

}  // namespace

BENCHMARK_MAIN();
