#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "rsdsig/field.h"
#include "rsdsig/params.h"
#include "rsdsig/vc.h"
#include "rsdsig/xof.h"

using namespace rsdsig;

namespace {

std::vector<ExtElem> random_elems(const ExtField& kf, size_t n, uint8_t tag) {
  Xof xof(128, Domain::rng_stream);
  xof.absorb_u8(tag);
  BitSource bits(xof);
  std::vector<ExtElem> out(n);
  for (auto& e : out) e = sample_ext(bits, kf);
  return out;
}

void BM_ext_mul(benchmark::State& state, uint16_t p, unsigned mu) {
  ExtField kf(PrimeField(p), mu);
  auto xs = random_elems(kf, 256, 1);
  auto ys = random_elems(kf, 256, 2);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kf.mul(xs[i & 255], ys[i & 255]));
    i++;
  }
}

void BM_ext_inv(benchmark::State& state, uint16_t p, unsigned mu) {
  ExtField kf(PrimeField(p), mu);
  auto xs = random_elems(kf, 256, 3);
  for (auto& x : xs)
    if (kf.is_zero(x)) x = kf.one();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kf.inv(xs[i & 255]));
    i++;
  }
}

void BM_xof_squeeze(benchmark::State& state) {
  unsigned lambda = unsigned(state.range(0));
  std::vector<uint8_t> out(4096);
  for (auto _ : state) {
    Xof xof(lambda);
    xof.absorb_u8(7);
    xof.squeeze(out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(out.size()));
}

void BM_pack(benchmark::State& state) {
  PrimeField fp(127);
  Xof xof(128, Domain::rng_stream);
  xof.absorb_u8(9);
  BitSource bits(xof);
  std::vector<uint16_t> v(1824);
  for (auto& x : v) x = sample_fp(bits, fp);
  for (auto _ : state) {
    auto bytes = pack_residues(v, fp);
    benchmark::DoNotOptimize(bytes.data());
  }
}

void BM_tree_commit(benchmark::State& state) {
  ParamSet ps = *find_params(state.range(0) == 256 ? "ternary-1-fast" : "ternary-1-short");
  std::vector<uint8_t> salt(ps.salt_bytes(), 1);
  std::vector<uint8_t> seed(ps.seed_bytes(), 2);
  for (auto _ : state) {
    auto [tree, com] = vc::commit(salt, seed, ps);
    benchmark::DoNotOptimize(com.digest.data());
  }
}

BENCHMARK_CAPTURE(BM_ext_mul, f127_mu2, 127, 2);
BENCHMARK_CAPTURE(BM_ext_mul, f3_mu6, 3, 6);
BENCHMARK_CAPTURE(BM_ext_mul, f3_mu7, 3, 7);
BENCHMARK_CAPTURE(BM_ext_inv, f127_mu2, 127, 2);
BENCHMARK_CAPTURE(BM_ext_inv, f3_mu7, 3, 7);
BENCHMARK(BM_xof_squeeze)->Arg(128)->Arg(256);
BENCHMARK(BM_pack);
BENCHMARK(BM_tree_commit)->Arg(256)->Arg(2048);

}  // namespace
