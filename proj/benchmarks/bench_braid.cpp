#include <benchmark/benchmark.h>

#include "braidkex/canonical_form.hpp"
#include "braidkex/keygen.hpp"
#include "braidkex/protocol.hpp"

namespace {

void BM_to_canonical(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    braidkex::Rng rng(42);
    const braidkex::BraidWord u = braidkex::random_word(n, len, rng);
    for (auto _ : state) benchmark::DoNotOptimize(braidkex::to_canonical(u));
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_to_canonical)->Args({8, 256})->Args({16, 1024})->Args({64, 1024})->Args({64, 8192});

void BM_canonical_multiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    braidkex::Rng rng(43);
    const braidkex::CanonicalForm f = braidkex::to_canonical(braidkex::random_word(n, len, rng));
    const braidkex::CanonicalForm g = braidkex::to_canonical(braidkex::random_word(n, len, rng));
    for (auto _ : state) benchmark::DoNotOptimize(braidkex::canonical_multiply(f, g));
}
BENCHMARK(BM_canonical_multiply)->Args({16, 512})->Args({64, 2048});

void BM_canonical_invert(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    braidkex::Rng rng(44);
    const braidkex::CanonicalForm f = braidkex::to_canonical(braidkex::random_word(n, len, rng));
    for (auto _ : state) benchmark::DoNotOptimize(braidkex::canonical_invert(f));
}
BENCHMARK(BM_canonical_invert)->Args({16, 512})->Args({64, 2048});

void BM_handshake(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int l = static_cast<int>(state.range(1));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(braidkex::run_handshake(n, l, seed++));
}
BENCHMARK(BM_handshake)->Args({8, 32})->Args({16, 128})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
