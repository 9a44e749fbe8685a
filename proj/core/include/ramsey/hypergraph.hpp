#pragma once

#include <ramsey/common.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

/// s-uniform hypergraph on vertices 0..n-1.
///
/// Every edge is a sorted tuple of s distinct vertices and the edge list is
/// kept in lexicographic order, which is the edge order the reveal procedure
/// relies on. Duplicate edges are either dropped (the default) or folded into
/// a per-edge multiplicity.
class UniformHypergraph {
public:
    enum class Duplicates { merge, count };

    UniformHypergraph() = default;
    UniformHypergraph(int s, Vertex n, std::vector<std::vector<Vertex>> edges,
        Duplicates duplicates = Duplicates::merge);

    int uniformity() const noexcept { return s_; }
    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return multiplicity_.size(); }
    bool empty() const noexcept { return multiplicity_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const
    {
        return {data_.data() + i * static_cast<std::size_t>(s_), static_cast<std::size_t>(s_)};
    }
    std::uint32_t multiplicity(std::size_t i) const { return multiplicity_[i]; }
    bool has_multiplicities() const noexcept { return counted_; }
    /// Sum of multiplicities; equals edge_count() for simple hypergraphs.
    std::uint64_t total_weight() const noexcept { return total_weight_; }

    /// Indices of edges containing v, ascending.
    std::span<const std::uint32_t> incident(Vertex v) const { return incidence_[v]; }
    std::size_t degree(Vertex v) const { return incidence_[v].size(); }

    /// Index of the edge equal to the sorted tuple, or -1.
    std::ptrdiff_t find_edge(std::span<const Vertex> sorted) const;

    std::vector<std::vector<Vertex>> edge_list() const;

    friend bool operator==(const UniformHypergraph & a, const UniformHypergraph & b)
    {
        return a.s_ == b.s_ && a.n_ == b.n_ && a.data_ == b.data_ && a.multiplicity_ == b.multiplicity_;
    }

private:
    int s_ = 2;
    Vertex n_ = 0;
    bool counted_ = false;
    std::vector<Vertex> data_;
    std::vector<std::uint32_t> multiplicity_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::uint64_t total_weight_ = 0;
};

/// Induced subhypergraph plus the order-preserving map new label -> old label.
struct InducedHypergraph {
    UniformHypergraph hypergraph;
    std::vector<Vertex> original;
};

/// Edges of H lying entirely inside `vertices`, relabelled in increasing order of
/// the original labels. Throws std::invalid_argument on out-of-range vertices.
InducedHypergraph induced(const UniformHypergraph & h, std::span<const Vertex> vertices);

/// True when H[vertices] is connected (a single vertex counts as connected,
/// the empty set does not).
bool is_connected_within(const UniformHypergraph & h, std::span<const Vertex> vertices);

/// Vertex sets of the connected components of H, each sorted; isolated
/// vertices form singleton components.
std::vector<std::vector<Vertex>> connected_components(const UniformHypergraph & h);

} // namespace ramsey
