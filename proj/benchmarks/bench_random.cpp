#include <ramsey/families.hpp>
#include <ramsey/janson.hpp>
#include <ramsey/prestars.hpp>
#include <ramsey/sampling.hpp>
#include <ramsey/threshold.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace ramsey;

static void monte_carlo_schur(benchmark::State & state)
{
    auto h = build_schur_hypergraph(61);
    PropertySpec property;
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo(h, SampleConfig{0.3, 100, 1, 0}, property));
}
BENCHMARK(monte_carlo_schur)->Unit(benchmark::kMillisecond);

static void threshold_curve_copies(benchmark::State & state)
{
    FamilySpec spec;
    spec.family = Family::copies;
    spec.size = static_cast<Vertex>(state.range(0));
    auto grid = parse_grid("0.1:1:10");
    for (auto _ : state)
        benchmark::DoNotOptimize(threshold_curve(spec, grid, 50, 7));
}
BENCHMARK(threshold_curve_copies)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

static void janson_schur(benchmark::State & state)
{
    auto h = build_schur_hypergraph(static_cast<Vertex>(state.range(0)));
    JansonInput input{h.vertex_count(), h.edge_list(), 0.2, 0.0};
    input.t = janson_bound(input).mu / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(janson_bound(input));
}
BENCHMARK(janson_schur)->Arg(61)->Arg(199);

static void preconstellations(benchmark::State & state)
{
    auto n = static_cast<Vertex>(state.range(0));
    std::vector<Vertex> half(static_cast<std::size_t>(n / 2));
    std::iota(half.begin(), half.end(), 1);
    std::vector<std::vector<Vertex>> y{half, half};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_preconstellations(y, n));
}
BENCHMARK(preconstellations)->Arg(31)->Arg(127);
