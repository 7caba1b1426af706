#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/gwp1.hpp"
#include "tqc/hurwitz.hpp"
#include "tqc/trres.hpp"
#include "tqc/wkb.hpp"

#include <benchmark/benchmark.h>

using namespace tqc;

static void BM_CatalanGeneral(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CatalanTable table;
        benchmark::DoNotOptimize(table.get(g, {6, 4, 2}));
    }
}
BENCHMARK(BM_CatalanGeneral)->DenseRange(0, 2);

static void BM_FreeEnergy(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FreeEnergyTable table;
        benchmark::DoNotOptimize(table.get(0, n));
    }
}
BENCHMARK(BM_FreeEnergy)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_IntersectionNumber(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(intersection_number(1, {1, 1, 1}));
}
BENCHMARK(BM_IntersectionNumber);

static void BM_AiryGammaSide(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(airy_Sm_gamma_side(m));
}
BENCHMARK(BM_AiryGammaSide)->Arg(5)->Arg(10)->Arg(20);

static void BM_WkbCatalan(benchmark::State& state)
{
    const QuantumCurveSpec C = catalan_quantum_curve();
    for (auto _ : state)
        benchmark::DoNotOptimize(wkb_hierarchy(C, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WkbCatalan)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_HurwitzTupleCount(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(hurwitz_tuple_count(1, {2, 2, 1}));
}
BENCHMARK(BM_HurwitzTupleCount)->Unit(benchmark::kMillisecond);

static void BM_QuantumCurveSeries(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(qc_series_check(static_cast<int>(state.range(0)), 4, 2));
}
BENCHMARK(BM_QuantumCurveSeries)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Gwp1Recursion(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_recursion(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Gwp1Recursion)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
