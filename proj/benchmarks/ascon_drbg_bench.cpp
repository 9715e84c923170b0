#include <benchmark/benchmark.h>

#include <string>

#include "ascon_drbg/ascon.hpp"
#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/mechanism.hpp"

using namespace ascon_drbg;

namespace {

void BM_Permutation(benchmark::State& state) {
  AsconState s;
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ascon_permute_inplace(s, rounds);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Permutation)->Arg(8)->Arg(12);

void BM_Hash256(benchmark::State& state) {
  const Bytes msg(static_cast<std::size_t>(state.range(0)), 0xa5);
  for (auto _ : state) benchmark::DoNotOptimize(ascon_hash256(msg));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Hash256)->Arg(32)->Arg(1024);

void BM_Aead128(benchmark::State& state) {
  const Bytes pt(static_cast<std::size_t>(state.range(0)), 0x5a);
  const AeadKey key;
  const AeadNonce nonce;
  for (auto _ : state) benchmark::DoNotOptimize(aead128_encrypt(key, nonce, {}, pt));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Aead128)->Arg(16)->Arg(1024);

void BM_Generate(benchmark::State& state, const std::string& name) {
  OsEntropySource entropy;
  auto m = make_mechanism(name);
  m->instantiate(entropy);
  const auto bits = static_cast<std::size_t>(state.range(0));
  BitString out;
  for (auto _ : state) {
    if (m->generate(bits, std::nullopt, out) != DrbgStatus::success) m->reseed(entropy);
    benchmark::DoNotOptimize(out);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bits / 8));
}

const int registered = [] {
  for (std::string_view name : kMechanismNames) {
    const std::string n(name);
    benchmark::RegisterBenchmark(("BM_Generate/" + n).c_str(), BM_Generate, n)
        ->Arg(256)
        ->Arg(8192);
  }
  return 0;
}();

}  // namespace

BENCHMARK_MAIN();
