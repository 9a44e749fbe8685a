#include <ramsey/graph.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <queue>
#include <stdexcept>

namespace ramsey {

Graph::Graph(Vertex n, std::vector<GraphEdge> edges) :
    n_(n),
    edges_(std::move(edges)),
    adjacency_(static_cast<std::size_t>(n))
{
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    for (auto & [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");

    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto & row : adjacency_)
        std::sort(row.begin(), row.end());

    if (n <= 64) {
        row_masks_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges_) {
            row_masks_[u] |= std::uint64_t{1} << v;
            row_masks_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    if (!row_masks_.empty())
        return (row_masks_[u] >> v) & 1;
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::ptrdiff_t Graph::edge_index(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), GraphEdge{u, v});
    if (it == edges_.end() || *it != GraphEdge{u, v})
        return -1;
    return it - edges_.begin();
}

Graph Graph::without_edge(std::size_t index) const
{
    auto rest = edges_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    return Graph{n_, std::move(rest)};
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> relabel(static_cast<std::size_t>(n_), -1);
    Vertex next = 0;
    for (auto v : vertices)
        relabel[v] = next++;
    std::vector<GraphEdge> kept;
    for (auto [u, v] : edges_)
        if (relabel[u] >= 0 && relabel[v] >= 0)
            kept.emplace_back(relabel[u], relabel[v]);
    return Graph{next, std::move(kept)};
}

std::size_t Graph::edges_within(std::uint64_t mask) const
{
    std::size_t twice = 0;
    for (auto m = mask; m != 0; m &= m - 1) {
        auto v = std::countr_zero(m);
        twice += static_cast<std::size_t>(std::popcount(row_masks_[v] & mask));
    }
    return twice / 2;
}

bool Graph::is_bipartite() const
{
    std::vector<int> side(static_cast<std::size_t>(n_), -1);
    for (Vertex s = 0; s < n_; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : adjacency_[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                }
                else if (side[w] == side[u])
                    return false;
            }
        }
    }
    return true;
}

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    Vertex count = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adjacency_[u])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

namespace atlas {

Graph complete(Vertex k)
{
    std::vector<GraphEdge> e;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    return Graph{k, std::move(e)};
}

Graph cycle(Vertex k)
{
    if (k < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<GraphEdge> e;
    for (Vertex i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return Graph{k, std::move(e)};
}

Graph path(Vertex k)
{
    if (k < 1)
        throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<GraphEdge> e;
    for (Vertex i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    return Graph{k, std::move(e)};
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen()
{
    std::vector<GraphEdge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph{10, std::move(e)};
}

Graph complete_bipartite(Vertex a, Vertex b)
{
    std::vector<GraphEdge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph{a + b, std::move(e)};
}

} // namespace atlas

namespace {

Vertex parse_count(std::string_view text, std::string_view spec)
{
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw std::invalid_argument("bad graph spec '" + std::string(spec) + "'");
    return value;
}

} // namespace

Graph graph_from_spec(std::string_view spec)
{
    auto colon = spec.find(':');
    auto name = spec.substr(0, colon);
    auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (name == "petersen" && arg.empty())
        return atlas::petersen();
    if (name == "complete")
        return atlas::complete(parse_count(arg, spec));
    if (name == "cycle")
        return atlas::cycle(parse_count(arg, spec));
    if (name == "path")
        return atlas::path(parse_count(arg, spec));
    if (name == "complete-bipartite") {
        auto comma = arg.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("complete-bipartite needs a,b");
        return atlas::complete_bipartite(parse_count(arg.substr(0, comma), spec), parse_count(arg.substr(comma + 1), spec));
    }
    throw std::invalid_argument("unknown graph spec '" + std::string(spec) + "'");
}

} // namespace ramsey
