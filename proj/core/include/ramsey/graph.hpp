#pragma once

#include <ramsey/common.hpp>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

using GraphEdge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with the smaller endpoint first and sorted, so two graphs
/// compare equal exactly when they have the same vertex count and edge set.
class Graph {
public:
    Graph() = default;
    Graph(Vertex n, std::vector<GraphEdge> edges);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const GraphEdge> edges() const noexcept { return edges_; }
    const GraphEdge & edge(std::size_t i) const { return edges_[i]; }

    bool has_edge(Vertex u, Vertex v) const;
    /// Index of edge uv in edges(), or -1.
    std::ptrdiff_t edge_index(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    Graph without_edge(std::size_t index) const;
    Graph induced(std::span<const Vertex> vertices) const;
    /// Edge count of the subgraph induced by a vertex bitmask (n <= 64).
    std::size_t edges_within(std::uint64_t mask) const;

    bool is_bipartite() const;
    bool is_connected() const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> row_masks_; // only filled when n <= 64
};

namespace atlas {
Graph complete(Vertex k);
Graph cycle(Vertex k);
Graph path(Vertex k);
Graph petersen();
Graph complete_bipartite(Vertex a, Vertex b);
} // namespace atlas

/// Parses "complete:k", "cycle:k", "path:k", "petersen", "complete-bipartite:a,b".
/// Throws std::invalid_argument on anything else.
Graph graph_from_spec(std::string_view spec);

} // namespace ramsey
