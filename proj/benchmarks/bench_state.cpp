#include <benchmark/benchmark.h>

#include "pvdel/state.hpp"

using namespace pvdel;

namespace {

void BM_PrepareBB84(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    Rng rng(Rng::Seed{});
    const BitString x = rng.bits(lambda);
    const BitString theta = rng.bits(lambda);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare_bb84(x, theta));
    }
}
BENCHMARK(BM_PrepareBB84)->Arg(8)->Arg(12)->Arg(16);

void BM_ApplyH(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    Rng rng(Rng::Seed{});
    const SparseState s = prepare_bb84(rng.bits(lambda), BitString::ones(lambda));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_h(s, 0));
    }
}
BENCHMARK(BM_ApplyH)->Arg(8)->Arg(12)->Arg(16);

void BM_MeasureAll(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    Rng rng(Rng::Seed{});
    const SparseState s = prepare_bb84(rng.bits(lambda), BitString::ones(lambda));
    const auto qubits = s.layout().all_qubits();
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_computational(s, qubits, rng));
    }
}
BENCHMARK(BM_MeasureAll)->Arg(8)->Arg(12)->Arg(16);

} // namespace
