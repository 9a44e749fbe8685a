#include <ramsey/sampling.hpp>

#include <ramsey/clots.hpp>
#include <ramsey/colouring.hpp>
#include <ramsey/reveal.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey {

std::vector<Vertex> sample_subset(Vertex n, double p, std::uint64_t seed, std::uint64_t trial)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("sampling probability must lie in [0, 1]");
    TrialStream stream{seed, trial};
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
        if (stream.uniform(static_cast<std::uint64_t>(v)) < p)
            kept.push_back(v);
    return kept;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n)
{
    if (n == 0)
        return {};
    constexpr double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double denom = 1.0 + z * z / nn;
    const double centre = (phat + z * z / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
    // The endpoints are exact at 0 and n; rounding would leave them a few ulps off.
    return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == n ? 1.0 : std::min(1.0, centre + half)};
}

std::string_view to_string(PropertyKind kind) noexcept
{
    switch (kind) {
    case PropertyKind::non_colourable: return "non-colourable";
    case PropertyKind::contains_clot: return "contains-clot";
    case PropertyKind::has_degenerates: return "has-degenerates";
    case PropertyKind::non_choosable_subset: return "non-choosable-subset";
    case PropertyKind::list_schur: return "list-schur";
    case PropertyKind::list_vdw: return "list-vdw";
    }
    return "non-colourable";
}

PropertyKind property_from_string(std::string_view name)
{
    for (auto kind : {PropertyKind::non_colourable, PropertyKind::contains_clot, PropertyKind::has_degenerates,
             PropertyKind::non_choosable_subset, PropertyKind::list_schur, PropertyKind::list_vdw})
        if (to_string(kind) == name)
            return kind;
    throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

Verdict evaluate_property(const UniformHypergraph & h, std::span<const Vertex> w, const PropertySpec & property)
{
    switch (property.kind) {
    case PropertyKind::non_colourable: {
        auto sub = induced(h, w);
        auto v = proper_colouring(sub.hypergraph, property.r, property.limits).verdict;
        if (v == Verdict::inconclusive)
            return v;
        return to_verdict(v == Verdict::no);
    }
    case PropertyKind::contains_clot:
        return to_verdict(!find_clots(h, w).empty());
    case PropertyKind::has_degenerates: {
        auto sub = induced(h, w);
        for (const auto & comp : connected_components(sub.hypergraph)) {
            if (comp.size() < 2)
                continue;
            std::vector<Vertex> labels;
            for (auto v : comp)
                labels.push_back(sub.original[v]);
            if (count_degenerate(reveal_layers(h, labels)) >= h.uniformity() - 1)
                return Verdict::yes;
        }
        return Verdict::no;
    }
    case PropertyKind::non_choosable_subset: {
        auto sub = induced(h, w);
        auto report = find_non_choosable_subsets(sub.hypergraph, property.k, property.choosability);
        if (!report.sets.empty())
            return Verdict::yes;
        return report.verdict == Verdict::inconclusive ? Verdict::inconclusive : Verdict::no;
    }
    case PropertyKind::list_schur:
        return list_schur({w.begin(), w.end()}, h.vertex_count(), property.choosability).verdict;
    case PropertyKind::list_vdw:
        return list_vdw({w.begin(), w.end()}, h.vertex_count(), property.k, property.choosability).verdict;
    }
    return Verdict::inconclusive;
}

MonteCarloResult monte_carlo(const UniformHypergraph & h, const SampleConfig & config, const PropertySpec & property,
    unsigned workers)
{
    if (!(config.p >= 0.0 && config.p <= 1.0))
        throw std::invalid_argument("sampling probability must lie in [0, 1]");
    if (config.trials == 0)
        throw std::invalid_argument("at least one trial is needed");
    auto outcomes = parallel_map(config.trials, workers, [&](std::size_t i) {
        auto w = sample_subset(h.vertex_count(), config.p, config.seed, config.first_trial + i);
        return evaluate_property(h, w, property);
    });
    MonteCarloResult result;
    result.trials = config.trials;
    for (auto v : outcomes) {
        if (v == Verdict::inconclusive)
            ++result.inconclusive;
        else if (v == Verdict::yes)
            ++result.successes;
    }
    const auto decided = result.trials - result.inconclusive;
    result.frequency = decided == 0 ? 0.0 : static_cast<double>(result.successes) / static_cast<double>(decided);
    result.wilson = wilson_interval(result.successes, decided);
    return result;
}

} // namespace ramsey
