#include <ramsey/collapsible.hpp>
#include <ramsey/colouring.hpp>
#include <ramsey/density.hpp>
#include <ramsey/homomorphism.hpp>
#include <ramsey/rainbow.hpp>

#include <benchmark/benchmark.h>

using namespace ramsey;

static void two_density_petersen(benchmark::State & state)
{
    auto g = atlas::petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(two_density(g));
}
BENCHMARK(two_density_petersen);

static void max_density_flow_cycle(benchmark::State & state)
{
    auto g = atlas::cycle(static_cast<Vertex>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_density_flow(g));
}
BENCHMARK(max_density_flow_cycle)->Arg(32)->Arg(128);

static void collapsible_complete(benchmark::State & state)
{
    auto g = atlas::complete(static_cast<Vertex>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(collapsible(g));
}
BENCHMARK(collapsible_complete)->Arg(4)->Arg(6);

static void rainbow_property_petersen(benchmark::State & state)
{
    auto g = atlas::petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(rainbow_sc_property(g, static_cast<int>(state.range(0))));
}
BENCHMARK(rainbow_property_petersen)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void hom_count_cycle_into_petersen(benchmark::State & state)
{
    auto f = atlas::cycle(static_cast<Vertex>(state.range(0)));
    auto g = atlas::petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_count(f, g));
}
BENCHMARK(hom_count_cycle_into_petersen)->Arg(5)->Arg(9);

static void arrow_k6_k3(benchmark::State & state)
{
    auto g = atlas::complete(6), h = atlas::complete(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(arrow_check(g, h, 2));
}
BENCHMARK(arrow_k6_k3);
