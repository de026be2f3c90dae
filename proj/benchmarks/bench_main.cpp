#include <benchmark/benchmark.h>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/tiles.hpp"
#include "hitomezashi/words.hpp"

using namespace hitomezashi;

static void BM_PellWord(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pell_word(n));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(pell(n)));
}
BENCHMARK(BM_PellWord)->DenseRange(4, 12, 2)->Complexity(benchmark::oN);

static void BM_BuildGrid(benchmark::State &state) {
    const int side = static_cast<int>(state.range(0));
    const PatternSpec spec = lookup("kakinohanazashi").spec(side, side);
    for (auto _ : state) benchmark::DoNotOptimize(build_grid(spec));
}
BENCHMARK(BM_BuildGrid)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ExtractComponents(benchmark::State &state) {
    const int side = static_cast<int>(state.range(0));
    const StitchGrid g = build_grid(lookup("sanju_kakinohanazashi").spec(side, side));
    for (auto _ : state) benchmark::DoNotOptimize(extract_components(g));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(side) * side);
}
BENCHMARK(BM_ExtractComponents)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oN);

static void BM_AnalyzeLoops(benchmark::State &state) {
    const int side = static_cast<int>(state.range(0));
    const StitchGrid g = build_grid(lookup("kakinohanazashi").spec(side, side));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_loops(g));
}
BENCHMARK(BM_AnalyzeLoops)->RangeMultiplier(2)->Range(32, 256);

static void BM_TwoColor(benchmark::State &state) {
    const int side = static_cast<int>(state.range(0));
    const StitchGrid g = build_grid(lookup("igetazashi").spec(side, side));
    for (auto _ : state) benchmark::DoNotOptimize(two_color(g));
}
BENCHMARK(BM_TwoColor)->RangeMultiplier(2)->Range(32, 512);

static void BM_TraceSnowflake(benchmark::State &state) {
    const SnowflakeOrder order(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(trace_snowflake(order));
}
BENCHMARK(BM_TraceSnowflake)->DenseRange(1, 7);

static void BM_CheckConjecture(benchmark::State &state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_conjecture(order));
}
BENCHMARK(BM_CheckConjecture)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_Table1(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(table1());
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
