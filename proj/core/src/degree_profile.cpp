#include <ramsey/degree_profile.hpp>

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

namespace {

struct RangeHash {
    std::size_t operator()(const std::vector<Vertex> & key) const
    {
        return boost::hash_range(key.begin(), key.end());
    }
};

// Calls visit(subset) for every t-subset of the sorted edge, in lexicographic order.
template <typename Visit>
void for_each_subset(std::span<const Vertex> edge, int t, std::vector<Vertex> & scratch, Visit && visit)
{
    const int s = static_cast<int>(edge.size());
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        idx[i] = i;
    scratch.resize(static_cast<std::size_t>(t));
    while (true) {
        for (int i = 0; i < t; ++i)
            scratch[i] = edge[idx[i]];
        visit(scratch);
        int i = t - 1;
        while (i >= 0 && idx[i] == s - t + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < t; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

using DegreeMap = std::unordered_map<std::vector<Vertex>, std::uint64_t, RangeHash>;

DegreeMap t_degrees(const UniformHypergraph & h, int t)
{
    if (t < 1 || t > h.uniformity())
        throw std::invalid_argument("t must lie in [1, s]");
    DegreeMap degrees;
    std::vector<Vertex> scratch;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for_each_subset(h.edge(i), t, scratch, [&](const std::vector<Vertex> & key) { degrees[key] += h.multiplicity(i); });
    return degrees;
}

} // namespace

std::uint64_t max_t_degree(const UniformHypergraph & h, int t)
{
    std::uint64_t best = 0;
    for (const auto & [key, d] : t_degrees(h, t))
        best = std::max(best, d);
    return best;
}

double sum_squared_t_degrees(const UniformHypergraph & h, int t)
{
    double total = 0.0;
    for (const auto & [key, d] : t_degrees(h, t))
        total += static_cast<double>(d) * static_cast<double>(d);
    return total;
}

DegreeProfile degree_profile(const UniformHypergraph & h)
{
    if (h.empty())
        throw std::invalid_argument("degree profile of an edgeless hypergraph (p_H undefined)");
    const int s = h.uniformity();
    DegreeProfile out;
    out.s = s;
    out.v = h.vertex_count();
    out.e = h.total_weight();
    out.max_degree.assign(s + 1, 0);
    out.average_degree.assign(s + 1, 0.0);
    out.occupied.assign(s + 1, 0);
    out.sum_squares.assign(s + 1, 0.0);
    out.ratio.assign(s + 1, 0.0);
    out.p_h = std::pow(static_cast<double>(out.v) / static_cast<double>(out.e), 1.0 / (s - 1));

    for (int t = 1; t <= s; ++t) {
        std::uint64_t total = 0;
        for (const auto & [key, d] : t_degrees(h, t)) {
            out.max_degree[t] = std::max(out.max_degree[t], d);
            out.sum_squares[t] += static_cast<double>(d) * static_cast<double>(d);
            total += d;
            ++out.occupied[t];
        }
        out.average_degree[t] = static_cast<double>(total) / static_cast<double>(out.occupied[t]);
        out.ratio[t] = static_cast<double>(out.max_degree[t]) * out.v
            / (std::pow(out.p_h, t - 1) * static_cast<double>(out.e));
    }
    return out;
}

UniformHypergraph trim_by_degree(const UniformHypergraph & h, int t, std::uint64_t m)
{
    if (t < 1 || t > h.uniformity())
        throw std::invalid_argument("t must lie in [1, s]");
    auto policy = h.has_multiplicities() ? UniformHypergraph::Duplicates::count : UniformHypergraph::Duplicates::merge;
    if (m == 0)
        return h;
    if (m >= h.total_weight())
        return UniformHypergraph{h.uniformity(), h.vertex_count(), {}, policy};

    // Ordered map so ties on the degree resolve to the lexicographically smallest t-set.
    std::map<std::vector<Vertex>, std::uint64_t> degree;
    std::map<std::vector<Vertex>, std::vector<std::uint32_t>> containing;
    std::vector<std::uint32_t> weight(h.edge_count());
    std::vector<Vertex> scratch;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        weight[i] = h.multiplicity(i);
        for_each_subset(h.edge(i), t, scratch, [&](const std::vector<Vertex> & key) {
            degree[key] += h.multiplicity(i);
            containing[key].push_back(static_cast<std::uint32_t>(i));
        });
    }

    for (std::uint64_t step = 0; step < m; ++step) {
        auto best = degree.begin();
        for (auto it = degree.begin(); it != degree.end(); ++it)
            if (it->second > best->second)
                best = it;
        std::uint32_t victim = 0;
        for (auto i : containing[best->first])
            if (weight[i] > 0) {
                victim = i;
                break;
            }
        --weight[victim];
        for_each_subset(h.edge(victim), t, scratch, [&](const std::vector<Vertex> & key) { --degree[key]; });
    }

    std::vector<std::vector<Vertex>> kept;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (std::uint32_t k = 0; k < weight[i]; ++k)
            kept.emplace_back(h.edge(i).begin(), h.edge(i).end());
    return UniformHypergraph{h.uniformity(), h.vertex_count(), std::move(kept), policy};
}

} // namespace ramsey
