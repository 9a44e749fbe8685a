#include <ramsey/families.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

GraphEdge pair_from_index(Vertex n, std::size_t index)
{
    Vertex i = 0;
    std::size_t row = static_cast<std::size_t>(n - 1);
    while (index >= row) {
        index -= row;
        ++i;
        --row;
    }
    return {i, static_cast<Vertex>(i + 1 + static_cast<Vertex>(index))};
}

namespace {

class CopyEnumerator {
public:
    CopyEnumerator(const Graph & pattern, const Graph & host) :
        pattern_(pattern),
        host_(host),
        image_(static_cast<std::size_t>(pattern.vertex_count()), -1),
        used_(static_cast<std::size_t>(host.vertex_count()), false)
    {
        // BFS order per component so every vertex after a component's first has a mapped neighbour.
        std::vector<bool> placed(static_cast<std::size_t>(pattern.vertex_count()), false);
        for (Vertex s = 0; s < pattern.vertex_count(); ++s) {
            if (placed[s] || pattern.degree(s) == 0)
                continue;
            std::size_t head = order_.size();
            order_.push_back(s);
            placed[s] = true;
            while (head < order_.size()) {
                auto u = order_[head++];
                for (auto w : pattern.neighbours(u))
                    if (!placed[w]) {
                        placed[w] = true;
                        order_.push_back(w);
                    }
            }
        }
    }

    std::vector<std::vector<Vertex>> run()
    {
        extend(0);
        std::sort(copies_.begin(), copies_.end());
        copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());
        return std::move(copies_);
    }

private:
    void extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            std::vector<Vertex> edge_set;
            edge_set.reserve(pattern_.edge_count());
            for (auto [a, b] : pattern_.edges())
                edge_set.push_back(static_cast<Vertex>(host_.edge_index(image_[a], image_[b])));
            std::sort(edge_set.begin(), edge_set.end());
            copies_.push_back(std::move(edge_set));
            return;
        }
        auto u = order_[depth];
        Vertex anchor = -1;
        for (auto w : pattern_.neighbours(u))
            if (image_[w] >= 0) {
                anchor = image_[w];
                break;
            }

        auto try_candidate = [&](Vertex x) {
            if (used_[x])
                return;
            for (auto w : pattern_.neighbours(u))
                if (image_[w] >= 0 && !host_.has_edge(image_[w], x))
                    return;
            image_[u] = x;
            used_[x] = true;
            extend(depth + 1);
            used_[x] = false;
            image_[u] = -1;
        };

        if (anchor >= 0)
            for (auto x : host_.neighbours(anchor))
                try_candidate(x);
        else
            for (Vertex x = 0; x < host_.vertex_count(); ++x)
                try_candidate(x);
    }

    const Graph & pattern_;
    const Graph & host_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
    std::vector<std::vector<Vertex>> copies_;
};

} // namespace

std::vector<std::vector<Vertex>> enumerate_copies(const Graph & pattern, const Graph & host)
{
    if (pattern.edge_count() == 0)
        return {};
    return CopyEnumerator{pattern, host}.run();
}

UniformHypergraph build_copies_hypergraph(const Graph & pattern, Vertex n)
{
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("copies hypergraph: pattern has no edges");
    if (pattern.edge_count() < 2)
        throw std::invalid_argument("copies hypergraph: pattern with one edge gives uniformity 1 (need at least 2)");
    if (n < pattern.vertex_count())
        throw std::invalid_argument("copies hypergraph: n = " + std::to_string(n) + " is smaller than v(H) = "
            + std::to_string(pattern.vertex_count()));
    auto host = atlas::complete(n);
    auto copies = enumerate_copies(pattern, host);
    auto vertices = static_cast<Vertex>(host.edge_count());
    return UniformHypergraph{static_cast<int>(pattern.edge_count()), vertices, std::move(copies)};
}

UniformHypergraph build_kap_hypergraph(int k, Vertex modulus)
{
    if (k < 3)
        throw std::invalid_argument("k-AP hypergraph needs k >= 3");
    if (modulus <= k)
        throw std::invalid_argument("k-AP hypergraph needs N > k");
    std::vector<std::vector<Vertex>> edges;
    std::vector<Vertex> terms(static_cast<std::size_t>(k));
    for (Vertex a = 0; a < modulus; ++a)
        for (Vertex d = 1; d < modulus; ++d) {
            for (int i = 0; i < k; ++i)
                terms[i] = static_cast<Vertex>((a + static_cast<std::int64_t>(i) * d) % modulus);
            auto sorted = terms;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                edges.push_back(std::move(sorted));
        }
    return UniformHypergraph{k, modulus, std::move(edges)};
}

UniformHypergraph build_schur_hypergraph(Vertex modulus, bool exclude_zero)
{
    if (modulus < 5)
        throw std::invalid_argument("Schur hypergraph needs N >= 5");
    const Vertex shift = exclude_zero ? 1 : 0;
    std::vector<std::vector<Vertex>> edges;
    for (Vertex x = shift; x < modulus; ++x)
        for (Vertex y = x + 1; y < modulus; ++y) {
            auto z = static_cast<Vertex>((x + y) % modulus);
            if (z == x || z == y || z < shift)
                continue;
            edges.push_back({static_cast<Vertex>(x - shift), static_cast<Vertex>(y - shift), static_cast<Vertex>(z - shift)});
        }
    return UniformHypergraph{3, modulus - shift, std::move(edges)};
}

} // namespace ramsey
