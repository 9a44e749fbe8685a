#pragma once

#include <ramsey/choosability.hpp>
#include <ramsey/hypergraph.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string_view>
#include <thread>
#include <vector>

namespace ramsey {

/// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

/// Counter-based stream for one trial. Draw j (0-based) is
///   key = mix64(seed ^ mix64(trial)),  x_j = mix64(key + (j + 1) * golden_gamma),
///   u_j = (x_j >> 11) * 2^-53.
/// Nothing depends on which thread runs the trial or in what order.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept : key_(mix64(seed ^ mix64(trial))) {}

    std::uint64_t bits(std::uint64_t j) const noexcept { return mix64(key_ + (j + 1) * golden_gamma); }
    double uniform(std::uint64_t j) const noexcept { return static_cast<double>(bits(j) >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_;
};

/// Vertex v of 0..n-1 is kept iff uniform(v) < p.
std::vector<Vertex> sample_subset(Vertex n, double p, std::uint64_t seed, std::uint64_t trial);

/// results[i] = task(i) for i < count, spread over `workers` threads. The output
/// depends only on `task`, never on the worker count.
template <typename Task>
auto parallel_map(std::size_t count, unsigned workers, Task && task)
{
    using Result = decltype(task(std::size_t{0}));
    std::vector<Result> results(count);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = task(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto run = [&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
            try {
                results[i] = task(i);
            }
            catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(run);
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval at 95% (z = 1.959963984540054). [0, 1] when n = 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n);

enum class PropertyKind { non_colourable, contains_clot, has_degenerates, non_choosable_subset, list_schur, list_vdw };
std::string_view to_string(PropertyKind kind) noexcept;
PropertyKind property_from_string(std::string_view name);

struct PropertySpec {
    PropertyKind kind = PropertyKind::non_colourable;
    int r = 2;            // colours for non_colourable
    int k = 3;            // subset size bound, or progression length for list_vdw
    ChoosabilityOptions choosability{};
    SearchLimits limits{}; // per-trial colouring budget
};

struct SampleConfig {
    double p = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    /// Offset added to the trial index, so several grid points can share a seed
    /// without sharing streams.
    std::uint64_t first_trial = 0;
};

struct MonteCarloResult {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t inconclusive = 0;
    /// successes / decided trials, 0 when nothing was decided.
    double frequency = 0.0;
    Interval wilson;
};

/// Verdict of the property on H[W]. For list_schur and list_vdw, H must be the
/// Schur (resp. k-AP) hypergraph on Z_N with vertex x = residue x.
Verdict evaluate_property(const UniformHypergraph & h, std::span<const Vertex> w, const PropertySpec & property);

MonteCarloResult monte_carlo(const UniformHypergraph & h, const SampleConfig & config, const PropertySpec & property,
    unsigned workers = 1);

} // namespace ramsey
