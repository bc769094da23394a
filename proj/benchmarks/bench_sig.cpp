#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "rsdsig/params.h"
#include "rsdsig/sig.h"
#include "rsdsig/xof.h"

using namespace rsdsig;

namespace {

struct Fixture {
  const ParamSet& ps;
  sig::SigningKey sk;
  sig::VerifyKey vk;
  std::vector<uint8_t> msg;
  SeededRng rng{std::vector<uint8_t>{0xbe, 0x7c}};

  explicit Fixture(const char* id) : ps(*find_params(id)) {
    auto [s, v] = sig::keygen(ps, rng);
    sk = std::move(s);
    vk = std::move(v);
    msg.assign(64, 0x6d);
  }
};

void BM_keygen(benchmark::State& state, const char* id) {
  const ParamSet& ps = *find_params(id);
  SeededRng rng(std::vector<uint8_t>{0x6b});
  for (auto _ : state) {
    auto [sk, vk] = sig::keygen(ps, rng);
    benchmark::DoNotOptimize(vk.s.data());
  }
}

void BM_sign(benchmark::State& state, const char* id) {
  Fixture fx(id);
  for (auto _ : state) {
    auto s = sig::sign(fx.sk, fx.msg, fx.ps, fx.rng);
    benchmark::DoNotOptimize(s.h2.data());
  }
  state.counters["sig_bytes"] = double(sig::signature_bytes(fx.ps));
}

void BM_verify(benchmark::State& state, const char* id) {
  Fixture fx(id);
  auto s = sig::sign(fx.sk, fx.msg, fx.ps, fx.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sig::verify(fx.vk, fx.msg, s, fx.ps));
  }
}

BENCHMARK_CAPTURE(BM_keygen, cross_1, "cross-1-fast");
BENCHMARK_CAPTURE(BM_keygen, ternary_1, "ternary-1-fast");
BENCHMARK_CAPTURE(BM_sign, cross_1_fast, "cross-1-fast")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sign, cross_1_short, "cross-1-short")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sign, ternary_1_fast, "ternary-1-fast")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sign, ternary_1_short, "ternary-1-short")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify, cross_1_fast, "cross-1-fast")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify, cross_1_short, "cross-1-short")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify, ternary_1_fast, "ternary-1-fast")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify, ternary_1_short, "ternary-1-short")->Unit(benchmark::kMillisecond);

}  // namespace
