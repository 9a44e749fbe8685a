#pragma once

#include <ramsey/graph.hpp>
#include <ramsey/hypergraph.hpp>

#include <vector>

namespace ramsey {

/// Position of the pair {i, j} of K_n in lexicographic row-major order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr std::size_t pair_index(Vertex n, Vertex i, Vertex j) noexcept
{
    if (i > j) {
        auto t = i;
        i = j;
        j = t;
    }
    auto ni = static_cast<std::size_t>(n), ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
    return ii * ni - ii * (ii + 1) / 2 + (jj - ii - 1);
}

/// Inverse of pair_index.
GraphEdge pair_from_index(Vertex n, std::size_t index);

/// Edge sets (as sorted indices into host.edges()) of all distinct copies of
/// `pattern` in `host`. Isolated vertices of the pattern are ignored.
std::vector<std::vector<Vertex>> enumerate_copies(const Graph & pattern, const Graph & host);

/// Hypergraph whose vertices are the edges of K_n (numbered by pair_index) and
/// whose edges are the edge sets of the copies of H.
UniformHypergraph build_copies_hypergraph(const Graph & pattern, Vertex n);

/// k-uniform hypergraph of proper k-term arithmetic progressions in Z_N.
UniformHypergraph build_kap_hypergraph(int k, Vertex modulus);

/// 3-uniform hypergraph of Schur triples {x, y, x+y} of distinct residues mod N.
/// With exclude_zero the residue 0 is deleted and residue x becomes vertex x-1.
UniformHypergraph build_schur_hypergraph(Vertex modulus, bool exclude_zero = false);

} // namespace ramsey
