#include "condinfo/entropy.hpp"
#include "condinfo/geometry.hpp"
#include "condinfo/kappa.hpp"

#include <benchmark/benchmark.h>

using namespace condinfo;

static void BM_BuildJoint(benchmark::State& state)
{
    const FieldSize f(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_joint(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(construction_info(f).total));
}
BENCHMARK(BM_BuildJoint)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_EntropyVector(benchmark::State& state)
{
    const FieldSize f(static_cast<std::uint64_t>(state.range(0)));
    const auto dist = build_joint(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(entropy_vector(dist));
}
BENCHMARK(BM_EntropyVector)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormVector(benchmark::State& state)
{
    const FieldSize f(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_form_vector(f));
}
BENCHMARK(BM_ClosedFormVector)->Arg(13)->Arg(10949);

static void BM_MinKappa(benchmark::State& state)
{
    const auto v = closed_form_vector(FieldSize(static_cast<std::uint64_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_kappa(v));
}
BENCHMARK(BM_MinKappa)->Arg(13)->Arg(10949);
