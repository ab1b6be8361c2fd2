#include <benchmark/benchmark.h>

#include <cmath>

#include "als/evolution.hpp"
#include "als/gridsearch.hpp"
#include "als/sluggish.hpp"
#include "als/timemap.hpp"

namespace {

void BM_TotalTimeBaseline(benchmark::State& state) {
    const als::ScheduleModel m = als::baseline(std::ldexp(1.0, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(als::total_time(m, 0, 1, 1.0));
}
BENCHMARK(BM_TotalTimeBaseline)->DenseRange(5, 25, 5);

void BM_TotalTimeM1(benchmark::State& state) {
    const als::ScheduleModel m = als::m1(std::ldexp(1.0, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(als::total_time(m, 0, 1, 1.0));
}
BENCHMARK(BM_TotalTimeM1)->DenseRange(5, 25, 5);

void BM_DetectSluggish(benchmark::State& state) {
    const als::ScheduleModel m = als::baseline(std::ldexp(1.0, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(als::detect_sluggish(m, 1.0));
}
BENCHMARK(BM_DetectSluggish)->Arg(6)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& state) {
    const double n = std::ldexp(1.0, 25);
    const als::SluggishWindow w = als::detect_sluggish(als::baseline(n), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(als::grid_search(n, w, 1.0));
}
BENCHMARK(BM_GridSearch)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
    const als::ScheduleModel m = als::baseline(64);
    const als::TimeMap tm(m, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(als::evolve(m, tm, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Evolve)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
