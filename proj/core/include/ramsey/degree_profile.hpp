#pragma once

#include <ramsey/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace ramsey {

/// Degree statistics of an s-uniform hypergraph, indexed by t = 1..s
/// (slot 0 of each vector is unused).
struct DegreeProfile {
    int s = 0;
    Vertex v = 0;
    std::uint64_t e = 0;
    std::vector<std::uint64_t> max_degree;  // Δ_t
    std::vector<double> average_degree;     // over t-sets lying in at least one edge
    std::vector<std::uint64_t> occupied;    // number of such t-sets
    std::vector<double> sum_squares;        // Σ_T deg(T)^2
    double p_h = 0.0;                       // (v/e)^(1/(s-1))
    std::vector<double> ratio;              // Δ_t · v / (p_H^(t-1) · e)
};

/// Throws std::invalid_argument on an edgeless hypergraph. Only t-subsets of
/// edges are visited, never all vertex t-sets.
DegreeProfile degree_profile(const UniformHypergraph & h);

/// Δ_t alone.
std::uint64_t max_t_degree(const UniformHypergraph & h, int t);

/// Σ over t-sets T of deg(T)^2.
double sum_squared_t_degrees(const UniformHypergraph & h, int t);

/// Greedy trimming: m times, find a t-set of largest current degree (smallest
/// such set in lexicographic order) and delete the smallest edge containing it.
/// Multiplicities are removed one copy at a time. m >= e(H) gives the empty
/// hypergraph.
UniformHypergraph trim_by_degree(const UniformHypergraph & h, int t, std::uint64_t m);

} // namespace ramsey
