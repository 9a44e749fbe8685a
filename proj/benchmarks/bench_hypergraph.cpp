#include <ramsey/choosability.hpp>
#include <ramsey/clots.hpp>
#include <ramsey/colouring.hpp>
#include <ramsey/degree_profile.hpp>
#include <ramsey/families.hpp>
#include <ramsey/reveal.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace ramsey;

static void build_schur(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_schur_hypergraph(static_cast<Vertex>(state.range(0))));
}
BENCHMARK(build_schur)->Arg(97)->Arg(401);

static void build_triangle_copies(benchmark::State & state)
{
    auto k3 = atlas::complete(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_copies_hypergraph(k3, static_cast<Vertex>(state.range(0))));
}
BENCHMARK(build_triangle_copies)->Arg(18)->Arg(40);

static void profile_kap(benchmark::State & state)
{
    auto h = build_kap_hypergraph(4, static_cast<Vertex>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(degree_profile(h));
}
BENCHMARK(profile_kap)->Arg(101);

static void colour_schur(benchmark::State & state)
{
    auto h = build_schur_hypergraph(static_cast<Vertex>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(proper_colouring(h, 2));
}
BENCHMARK(colour_schur)->Arg(7)->Arg(31);

static void choosable_fano(benchmark::State & state)
{
    UniformHypergraph fano{3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(is_2_choosable(fano));
}
BENCHMARK(choosable_fano);

static void choosable_k5_wrt_k3(benchmark::State & state)
{
    auto g = atlas::complete(5), h = atlas::complete(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_2_choosable_wrt(g, h));
}
BENCHMARK(choosable_k5_wrt_k3)->Unit(benchmark::kMillisecond)->Iterations(2);

static void reveal_schur(benchmark::State & state)
{
    auto h = build_schur_hypergraph(static_cast<Vertex>(state.range(0)));
    std::vector<Vertex> all(static_cast<std::size_t>(h.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(reveal_layers(h, all));
}
BENCHMARK(reveal_schur)->Arg(61);

static void clots_schur(benchmark::State & state)
{
    auto h = build_schur_hypergraph(static_cast<Vertex>(state.range(0)));
    std::vector<Vertex> all(static_cast<std::size_t>(h.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_clots(h, all));
}
BENCHMARK(clots_schur)->Arg(31);
