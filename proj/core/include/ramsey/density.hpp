#pragma once

#include <ramsey/graph.hpp>
#include <ramsey/rational.hpp>

#include <optional>
#include <vector>

namespace ramsey {

/// Value and maximising vertex set. For the 1/2 floor of m_2 the witness is empty.
struct DensityWitness {
    Rational value;
    std::vector<Vertex> vertices;
};

/// Largest vertex count accepted by the subset enumerations below.
inline constexpr Vertex max_enumerable_vertices = 30;

/// m_2(H) = max(1/2, max over subgraphs F with v_F >= 3 of (e_F - 1)/(v_F - 2)).
/// Only induced subgraphs are scanned since they maximise e_F for a vertex set.
DensityWitness two_density(const Graph & h);

/// m(G) = max over nonempty subgraphs of e_F/v_F. Enumerates subsets up to
/// 20 vertices and switches to a parametric min-cut beyond that.
DensityWitness max_density(const Graph & g);
DensityWitness max_density_enumerate(const Graph & g);
DensityWitness max_density_flow(const Graph & g);

struct BalanceReport {
    bool strictly_2_balanced = true;
    /// Proper subgraph F with m_2(F) >= (e_H - 1)/(v_H - 2), the one of largest value.
    std::optional<DensityWitness> violator;
};

BalanceReport strictly_2_balanced(const Graph & h);
bool is_strictly_2_balanced(const Graph & h);

/// Some single edge removal leaves a bipartite graph.
bool is_nearly_bipartite(const Graph & h);

/// First W with 1 <= |W| <= v_H - 3 violating m_2(H)|W| < (edges meeting W), or
/// nullopt when none does. Only meaningful for strictly 2-balanced H.
std::optional<std::vector<Vertex>> helpful_lemma_violation(const Graph & h);
bool helpful_lemma_check(const Graph & h);

} // namespace ramsey
