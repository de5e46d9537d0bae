#include <benchmark/benchmark.h>

#include "pikiln/bruno.hpp"
#include "pikiln/numerics.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/products.hpp"
#include "pikiln/series.hpp"

using namespace pikiln;

static void BM_ReferencePi(benchmark::State& state)
{
    const PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference_pi(ctx));
}
BENCHMARK(BM_ReferencePi)->Arg(30)->Arg(100)->Arg(1000);

static void BM_Sqrt(benchmark::State& state)
{
    const PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    const BigFixed two = BigFixed::from_integer(2, ctx.scale());
    for (auto _ : state)
        benchmark::DoNotOptimize(sqrt(two));
}
BENCHMARK(BM_Sqrt)->Arg(30)->Arg(300);

static void BM_LnExp(benchmark::State& state)
{
    const PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    const BigFixed seven = BigFixed::from_integer(7, ctx.scale());
    for (auto _ : state)
        benchmark::DoNotOptimize(exp(ln(seven, ctx), ctx));
}
BENCHMARK(BM_LnExp)->Arg(30)->Arg(100);

static void BM_PiPowerAccelerated(benchmark::State& state)
{
    const PrecisionContext ctx(30);
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pi_power_from_series(k, Rational(1, 4), ctx));
}
BENCHMARK(BM_PiPowerAccelerated)->Arg(0)->Arg(6);

static void BM_CotangentEulerMaclaurin(benchmark::State& state)
{
    const PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cotangent_series(Rational(1, 3), ctx));
}
BENCHMARK(BM_CotangentEulerMaclaurin)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_BkSymbolic(benchmark::State& state)
{
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bk_symbolic(k));
}
BENCHMARK(BM_BkSymbolic)->Arg(4)->Arg(12);

static void BM_EulerWallis(benchmark::State& state)
{
    const PrecisionContext ctx(30);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            euler_wallis(Rational(1, 2), static_cast<std::uint64_t>(state.range(0)), TailCorrection::first_order, ctx));
}
BENCHMARK(BM_EulerWallis)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
