#include <benchmark/benchmark.h>

#include "nilorb/pipeline.hpp"

using namespace nilorb;

static void BM_VerifyE8(benchmark::State& state)
{
    const auto& cat = Catalog::load_embedded();
    Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : state) {
        auto rep = verify_tables(cat, "E8", exec);
        benchmark::DoNotOptimize(rep.rows.size());
    }
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_VerifyE8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ClassicalSuite(benchmark::State& state)
{
    Exec exec = state.range(1) ? Exec::parallel : Exec::serial;
    for (auto _ : state) {
        auto rep = classical_suite(Family::D, static_cast<int>(state.range(0)), exec);
        benchmark::DoNotOptimize(rep.checks_run);
    }
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_ClassicalSuite)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
