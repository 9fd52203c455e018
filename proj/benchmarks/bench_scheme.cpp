#include <benchmark/benchmark.h>

#include "pvdel/oracle.hpp"
#include "pvdel/scheme.hpp"

using namespace pvdel;

namespace {

void BM_Encrypt(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    const PvdParams params = PvdParams::make(lambda, "sha256", 128);
    Rng rng(Rng::Seed{});
    const auto [pk, sk] = pvd_gen(params, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pvd_enc(params, pk, 1, rng));
    }
}
BENCHMARK(BM_Encrypt)->Arg(8)->Arg(16);

void BM_EncryptDecrypt(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    const PvdParams params = PvdParams::make(lambda, "sha256", 128);
    Rng rng(Rng::Seed{});
    const auto [pk, sk] = pvd_gen(params, rng);
    for (auto _ : state) {
        auto [vk, ct] = pvd_enc(params, pk, 1, rng);
        benchmark::DoNotOptimize(pvd_dec(params, sk, std::move(ct), rng));
    }
}
BENCHMARK(BM_EncryptDecrypt)->Arg(8)->Arg(16);

void BM_DeleteVerify(benchmark::State& state) {
    const auto lambda = static_cast<std::size_t>(state.range(0));
    const PvdParams params = PvdParams::make(lambda, "sha256", 128);
    Rng rng(Rng::Seed{});
    const auto [pk, sk] = pvd_gen(params, rng);
    for (auto _ : state) {
        auto [vk, ct] = pvd_enc(params, pk, 0, rng);
        const DeletionCertificate cert = pvd_del(params, std::move(ct), rng);
        benchmark::DoNotOptimize(pvd_vrfy(vk, cert));
    }
}
BENCHMARK(BM_DeleteVerify)->Arg(8)->Arg(16);

void BM_EverlastingOracle(benchmark::State& state) {
    OracleConfig config;
    config.lambda = static_cast<std::size_t>(state.range(0));
    config.preimage_bits = 32;
    const auto honest = make_adversary("honest");
    const Rng root(Rng::Seed{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(everlasting_oracle(config, *honest, root));
    }
}
BENCHMARK(BM_EverlastingOracle)->Arg(3)->Arg(4);

} // namespace
