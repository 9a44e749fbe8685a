#pragma once

#include <ramsey/common.hpp>
#include <ramsey/graph.hpp>

#include <optional>
#include <vector>

namespace ramsey {

/// A homomorphism H∖f → H∖e sending both endpoints of f to `target`.
struct CollapseWitness {
    std::size_t e = 0;
    Vertex a = -1; // the endpoint of e we were asked about (-1 for the semi variant)
    std::size_t f = 0;
    Vertex target = -1;
    std::vector<Vertex> map;
};

struct CollapseReport {
    Verdict verdict = Verdict::inconclusive;
    /// One witness per (e, a) pair (per e for the semi variant), in edge order.
    std::vector<CollapseWitness> witnesses;
    /// First (e, a) with no suitable f; a is -1 for the semi variant.
    std::optional<std::pair<std::size_t, Vertex>> failure;
    std::uint64_t nodes = 0;
};

/// For every edge e and endpoint a of e: some edge f and a homomorphism
/// H∖f → H∖e mapping both ends of f to a.
CollapseReport collapsible(const Graph & h, SearchLimits limits = {});
bool is_collapsible(const Graph & h);

/// As above with the common image of f's endpoints left free.
CollapseReport semi_collapsible(const Graph & h, SearchLimits limits = {});
bool is_semi_collapsible(const Graph & h);

/// Re-checks a witness from scratch.
bool verify_collapse(const Graph & h, const CollapseWitness & w);

} // namespace ramsey
