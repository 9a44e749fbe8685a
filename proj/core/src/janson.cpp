#include <ramsey/janson.hpp>

#include <ramsey/sampling.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

namespace {

std::vector<std::vector<Vertex>> normalised(const std::vector<std::vector<Vertex>> & sets, Vertex ground)
{
    auto out = sets;
    for (auto & b : out) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (!b.empty() && (b.front() < 0 || b.back() >= ground))
            throw std::invalid_argument("set element outside the ground set");
    }
    return out;
}

} // namespace

JansonResult janson_bound(const JansonInput & input)
{
    if (!(input.p >= 0.0 && input.p <= 1.0))
        throw std::invalid_argument("p must lie in [0, 1]");
    auto sets = normalised(input.sets, input.ground);
    std::vector<std::vector<std::uint32_t>> containing(static_cast<std::size_t>(input.ground));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (auto v : sets[i])
            containing[v].push_back(static_cast<std::uint32_t>(i));

    JansonResult result;
    for (const auto & b : sets)
        result.mu += std::pow(input.p, static_cast<double>(b.size()));

    std::vector<std::size_t> shared(sets.size(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        touched.clear();
        for (auto v : sets[i])
            for (auto j : containing[v]) {
                if (shared[j]++ == 0)
                    touched.push_back(j);
            }
        for (auto j : touched) {
            auto united = sets[i].size() + sets[j].size() - shared[j];
            result.var_prime += std::pow(input.p, static_cast<double>(united));
            shared[j] = 0;
        }
    }

    if (input.t < 0.0 || input.t > result.mu * (1.0 + 1e-12))
        throw std::invalid_argument("t must lie in [0, mu]");
    if (input.t == 0.0)
        result.bound = 1.0;
    else if (result.var_prime == 0.0)
        result.bound = 0.0;
    else
        result.bound = std::exp(-input.t * input.t / (2.0 * result.var_prime));
    return result;
}

LowerTailEstimate janson_monte_carlo(const JansonInput & input, std::uint64_t trials, std::uint64_t seed,
    unsigned workers)
{
    if (trials == 0)
        throw std::invalid_argument("at least one trial is needed");
    LowerTailEstimate estimate;
    estimate.janson = janson_bound(input);
    auto sets = normalised(input.sets, input.ground);
    const double level = estimate.janson.mu - input.t;

    auto hits = parallel_map(trials, workers, [&](std::size_t trial) {
        TrialStream stream{seed, trial};
        std::vector<char> kept(static_cast<std::size_t>(input.ground));
        for (Vertex v = 0; v < input.ground; ++v)
            kept[v] = stream.uniform(static_cast<std::uint64_t>(v)) < input.p;
        std::uint64_t x = 0;
        for (const auto & b : sets)
            x += std::all_of(b.begin(), b.end(), [&](Vertex v) { return kept[v] != 0; });
        return static_cast<int>(static_cast<double>(x) <= level + 1e-9);
    });
    estimate.trials = trials;
    for (auto h : hits)
        estimate.hits += static_cast<std::uint64_t>(h);
    const double n = static_cast<double>(trials);
    const double b = estimate.janson.bound;
    estimate.frequency = static_cast<double>(estimate.hits) / n;
    estimate.sigma = std::sqrt(b * (1.0 - b) / n);
    estimate.within = estimate.frequency <= b + 3.0 * estimate.sigma;
    return estimate;
}

CoarsenessReport local_coarseness_check(const std::vector<std::vector<Vertex>> & family, Vertex ground, double p,
    double c, std::uint64_t trials, std::uint64_t seed, unsigned workers)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("p must lie in [0, 1]");
    if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("c must lie in (0, 1]");
    if (trials == 0)
        throw std::invalid_argument("at least one trial is needed");
    auto sets = normalised(family, ground);
    CoarsenessReport report;
    for (const auto & b : sets)
        report.k = std::max(report.k, static_cast<int>(b.size()));

    // Bit 0: some set inside V_p; bit 1: some set inside V_cp.
    auto outcomes = parallel_map(trials, workers, [&](std::size_t trial) {
        TrialStream stream{seed, trial};
        std::vector<double> u(static_cast<std::size_t>(ground));
        for (Vertex v = 0; v < ground; ++v)
            u[v] = stream.uniform(static_cast<std::uint64_t>(v));
        int flags = 0;
        for (const auto & b : sets) {
            if (std::all_of(b.begin(), b.end(), [&](Vertex v) { return u[v] < p; }))
                flags |= 1;
            if (std::all_of(b.begin(), b.end(), [&](Vertex v) { return u[v] < c * p; }))
                flags |= 2;
            if (flags == 3)
                break;
        }
        return flags;
    });
    std::uint64_t at_p = 0, at_cp = 0;
    for (auto f : outcomes) {
        at_p += static_cast<std::uint64_t>(f & 1);
        at_cp += static_cast<std::uint64_t>(f >> 1 & 1);
    }
    const double n = static_cast<double>(trials);
    report.mu_p = static_cast<double>(at_p) / n;
    report.mu_cp = static_cast<double>(at_cp) / n;
    const double ck = std::pow(c, report.k);
    report.lower = ck * report.mu_p;
    report.sigma = std::sqrt(report.mu_cp * (1.0 - report.mu_cp) / n + ck * ck * report.mu_p * (1.0 - report.mu_p) / n);
    report.holds = report.mu_cp + 3.0 * report.sigma >= report.lower;
    return report;
}

} // namespace ramsey
