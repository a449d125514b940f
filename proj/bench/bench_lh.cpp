// Compares the serial reference and the OpenMP path of the per-cell local
// homology field, plus interference complex construction.

#include <benchmark/benchmark.h>

#include "lhnet/geometry.hpp"
#include "lhnet/homology.hpp"

using namespace lhnet;

namespace {

Complex benchmark_complex(int nodes) {
    return link_complex(random_network(nodes, 100.0, 26.0, 12345));
}

void bench_lh_field_serial(benchmark::State& state) {
    const Complex x = benchmark_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lh_field(x, 2, Exec::serial));
    state.SetLabel(std::to_string(x.cell_count()) + " cells");
}

void bench_lh_field_parallel(benchmark::State& state) {
    const Complex x = benchmark_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lh_field(x, 2, Exec::parallel));
    state.SetLabel(std::to_string(x.cell_count()) + " cells");
}

void bench_interference_serial(benchmark::State& state) {
    const auto net = random_network(static_cast<int>(state.range(0)), 100.0, 14.0, 777);
    for (auto _ : state)
        benchmark::DoNotOptimize(interference_complex(net, 1e-9, Exec::serial));
}

void bench_interference_parallel(benchmark::State& state) {
    const auto net = random_network(static_cast<int>(state.range(0)), 100.0, 14.0, 777);
    for (auto _ : state)
        benchmark::DoNotOptimize(interference_complex(net, 1e-9, Exec::parallel));
}

}  // namespace

BENCHMARK(bench_lh_field_serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_lh_field_parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_interference_serial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_interference_parallel)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
