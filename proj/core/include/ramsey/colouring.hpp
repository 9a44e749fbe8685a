#pragma once

#include <ramsey/common.hpp>
#include <ramsey/graph.hpp>
#include <ramsey/hypergraph.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

/// Two-element colour lists, one per vertex, colours from 1 up.
struct ListAssignment {
    std::vector<std::array<int, 2>> lists;

    /// Bit c of mask v is set when colour c is on v's list.
    std::vector<std::uint32_t> masks() const;
    /// Every vertex gets {1, 2}.
    static ListAssignment identical(Vertex n);
};

/// Colour per vertex, 0 meaning unassigned.
using PartialColouring = std::vector<int>;

/// Largest palette the solvers accept (colours live in a 32-bit mask).
inline constexpr int max_colours = 31;

struct ColouringResult {
    /// yes: a proper colouring exists and is in `colouring`; no: certified none.
    Verdict verdict = Verdict::inconclusive;
    std::vector<int> colouring;
    std::uint64_t nodes = 0;
};

/// No edge monochromatic. Vertices outside any edge get colour 1 (or the first
/// colour on their list).
bool is_proper(const UniformHypergraph & h, std::span<const int> colouring);

/// Complete backtracking over vertices (fewest remaining colours first, then
/// highest degree, then index) with unit propagation: once s-1 vertices of an
/// edge share colour c, c leaves the last vertex's domain. Without lists,
/// colours are tried in first-use order (interchangeable colours are tried once).
/// `domains`, if given, holds one colour mask per vertex.
ColouringResult proper_colouring(const UniformHypergraph & h, int r, SearchLimits limits = {},
    std::span<const std::uint32_t> domains = {});

/// Same search reused across many list assignments of one hypergraph.
class ListColourer {
public:
    ListColourer(const UniformHypergraph & h, int colours);
    /// Proper colouring respecting the masks, or empty. Counts nodes into budget.
    std::optional<std::vector<int>> solve(std::span<const std::uint32_t> domains, Budget & budget);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Hypergraph on G's edges (indexed as in g.edges()) whose edges are the copies of H in G.
/// Requires e_H >= 2.
UniformHypergraph copies_in(const Graph & h, const Graph & g);

struct ArrowResult {
    Verdict verdict = Verdict::inconclusive; // yes: G → (H)_r
    std::vector<int> colouring;              // per edge of G when the verdict is no
    std::uint64_t nodes = 0;
};

/// G → (H)_r: every r-colouring of E(G) has a monochromatic copy of H.
ArrowResult arrow_check(const Graph & g, const Graph & h, int r, SearchLimits limits = {});

/// True when no copy of H (by edge index sets) is monochromatic.
bool is_h_free_colouring(const Graph & g, const Graph & h, std::span<const int> edge_colours);

struct MonochromaticResult {
    std::uint64_t value = 0;
    bool exact = false;
    std::vector<int> colouring;
};

/// Minimum number of monochromatic edges over all r-colourings. Exact branch and
/// bound up to `vertex_cap` vertices; beyond it a greedy colouring improved by
/// single-vertex recolouring, flagged inexact.
MonochromaticResult min_monochromatic_edges(const UniformHypergraph & h, int r, Vertex vertex_cap = 28,
    SearchLimits limits = {});

std::uint64_t count_monochromatic(const UniformHypergraph & h, std::span<const int> colouring);

} // namespace ramsey
