#pragma once

#include <ramsey/choosability.hpp>
#include <ramsey/hypergraph.hpp>
#include <ramsey/reveal.hpp>

#include <optional>
#include <vector>

namespace ramsey {

struct Completion {
    std::vector<Vertex> subset; // an (s-1)-subset of the nucleus
    Vertex first;               // two smallest outside vertices completing it to an edge
    Vertex second;
    std::size_t total;          // how many completions exist inside W
};

struct Clot {
    std::vector<Vertex> nucleus; // 2s-3 vertices
    std::vector<Completion> completions;
    std::vector<Vertex> support; // nucleus plus the recorded completions, sorted
};

/// Every nucleus A ⊆ W (|A| = 2s-3) whose (s-1)-subsets each extend to an edge
/// of H[W] through at least two vertices of W outside A. Nuclei come out in
/// lexicographic order. Requires s >= 3.
std::vector<Clot> find_clots(const UniformHypergraph & h, std::span<const Vertex> w);

enum class ObstructionStatus {
    holds,          // minimally non-2-choosable and the disjunction holds
    violated,       // minimally non-2-choosable but neither alternative occurs
    not_applicable, // S is not minimally non-2-choosable
    inconclusive    // a choosability check ran out of budget
};
std::string_view to_string(ObstructionStatus status) noexcept;

struct ObstructionReport {
    ObstructionStatus status = ObstructionStatus::inconclusive;
    bool non_choosable = false;
    bool minimal = false;
    int degenerate = 0;
    int depth = 0;
    bool layer_bound_ok = true; // d(S) <= (|S|-1)/(s-1) whenever degenerate >= s-1
    std::optional<Clot> clot;
    std::optional<RevealTrace> trace;
};

/// Checks that S is minimally non-2-choosable (S and every S - v, lists from
/// [1, universe]) and, if so, whether it has s-1 degenerate vertices or holds a clot.
ObstructionReport check_obstruction(const UniformHypergraph & h, std::span<const Vertex> s, int universe,
    const ChoosabilityOptions & base = {});

} // namespace ramsey
