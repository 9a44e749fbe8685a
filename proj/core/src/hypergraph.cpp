#include <ramsey/hypergraph.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ramsey {

UniformHypergraph::UniformHypergraph(int s, Vertex n, std::vector<std::vector<Vertex>> edges, Duplicates duplicates) :
    s_(s),
    n_(n),
    counted_(duplicates == Duplicates::count),
    incidence_(static_cast<std::size_t>(n))
{
    if (s < 2)
        throw std::invalid_argument("hypergraph uniformity must be at least 2, got " + std::to_string(s));
    if (n < 0)
        throw std::invalid_argument("hypergraph: negative vertex count");

    for (auto & e : edges) {
        if (static_cast<int>(e.size()) != s)
            throw std::invalid_argument("hypergraph: edge of size " + std::to_string(e.size()) + " in a "
                + std::to_string(s) + "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("hypergraph: vertex out of range");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("hypergraph: repeated vertex inside an edge");
    }
    std::sort(edges.begin(), edges.end());

    data_.reserve(edges.size() * static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && edges[i] == edges[i - 1]) {
            if (counted_)
                ++multiplicity_.back();
            continue;
        }
        data_.insert(data_.end(), edges[i].begin(), edges[i].end());
        multiplicity_.push_back(1);
    }
    total_weight_ = std::accumulate(multiplicity_.begin(), multiplicity_.end(), std::uint64_t{0});

    for (std::size_t i = 0; i < multiplicity_.size(); ++i)
        for (auto v : edge(i))
            incidence_[v].push_back(static_cast<std::uint32_t>(i));
}

std::ptrdiff_t UniformHypergraph::find_edge(std::span<const Vertex> sorted) const
{
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), sorted.begin(), sorted.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < edge_count() && std::ranges::equal(edge(lo), sorted))
        return static_cast<std::ptrdiff_t>(lo);
    return -1;
}

std::vector<std::vector<Vertex>> UniformHypergraph::edge_list() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i)
        for (std::uint32_t k = 0; k < multiplicity_[i]; ++k)
            out.emplace_back(edge(i).begin(), edge(i).end());
    return out;
}

InducedHypergraph induced(const UniformHypergraph & h, std::span<const Vertex> vertices)
{
    std::vector<Vertex> original(vertices.begin(), vertices.end());
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    if (!original.empty() && (original.front() < 0 || original.back() >= h.vertex_count()))
        throw std::invalid_argument("induced: vertex out of range");

    std::vector<Vertex> relabel(static_cast<std::size_t>(h.vertex_count()), -1);
    for (std::size_t i = 0; i < original.size(); ++i)
        relabel[original[i]] = static_cast<Vertex>(i);

    std::vector<std::vector<Vertex>> kept;
    std::vector<Vertex> buffer;
    for (auto v : original)
        for (auto idx : h.incident(v)) {
            auto e = h.edge(idx);
            if (e.front() != v)
                continue; // visit each edge once, from its smallest vertex
            buffer.clear();
            bool inside = true;
            for (auto u : e) {
                if (relabel[u] < 0) {
                    inside = false;
                    break;
                }
                buffer.push_back(relabel[u]);
            }
            if (inside)
                for (std::uint32_t k = 0; k < h.multiplicity(idx); ++k)
                    kept.push_back(buffer);
        }

    auto policy = h.has_multiplicities() ? UniformHypergraph::Duplicates::count : UniformHypergraph::Duplicates::merge;
    return {UniformHypergraph{h.uniformity(), static_cast<Vertex>(original.size()), std::move(kept), policy},
        std::move(original)};
}

bool is_connected_within(const UniformHypergraph & h, std::span<const Vertex> vertices)
{
    if (vertices.empty())
        return false;
    auto sub = induced(h, vertices);
    return connected_components(sub.hypergraph).size() == 1;
}

std::vector<std::vector<Vertex>> connected_components(const UniformHypergraph & h)
{
    auto n = static_cast<std::size_t>(h.vertex_count());
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        auto root = find(e[0]);
        for (std::size_t k = 1; k < e.size(); ++k) {
            auto other = find(e[k]);
            if (other != root) {
                auto lo = std::min(other, root);
                parent[std::max(other, root)] = lo;
                root = lo;
            }
        }
    }
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> slot(n, -1);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        auto r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<Vertex>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

} // namespace ramsey
