// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <array>

#include "psido/constructors.hpp"
#include "psido/derivation.hpp"
#include "psido/radicals.hpp"
#include "psido/ring.hpp"

using namespace psido;

namespace {

// Z/2[a1, a2]/(a1^2, a2^e): order 2^(2e).
RingPtr bench_ring(std::int64_t e)
{
    const std::array<std::uint32_t, 2> ex{2, static_cast<std::uint32_t>(e)};
    return make_truncated_poly(2, ex);
}

Exec exec_of(const benchmark::State& state)
{
    return state.range(1) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state, const FiniteRing& r)
{
    state.SetLabel(std::string(state.range(1) == 0 ? "serial" : "omp") + " order " + std::to_string(r.order()));
}

void BM_ValidateRing(benchmark::State& state)
{
    const auto r = bench_ring(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_ring(*r, exec_of(state)).ok());
    label(state, *r);
}

void BM_ValidateDerivation(benchmark::State& state)
{
    const auto r = bench_ring(state.range(0));
    const auto d = Derivation::from_generator_images(r, {{"a1", *r->one()}});
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_derivation(*r, *d, exec_of(state)).size());
    label(state, *r);
}

void BM_RadidealIl(benchmark::State& state)
{
    const auto r = bench_ring(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(radideal_Il(r, exec_of(state)).members.size());
    label(state, *r);
}

void BM_PrimeRadical(benchmark::State& state)
{
    const auto r = bench_ring(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(prime_radical(r, exec_of(state)).members.size());
    label(state, *r);
}

void BM_RadidealIlDelta(benchmark::State& state)
{
    const auto r = bench_ring(state.range(0));
    const auto d = Derivation::from_generator_images(r, {{"a2", *r->generator("a2")}});
    for (auto _ : state)
        benchmark::DoNotOptimize(radideal_Il_delta(*r, *d, exec_of(state)).members.size());
    label(state, *r);
}

} // namespace

BENCHMARK(BM_ValidateRing)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateDerivation)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadidealIl)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeRadical)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadidealIlDelta)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
