#pragma once

#include <ramsey/hypergraph.hpp>

#include <iosfwd>
#include <span>
#include <string_view>
#include <string>
#include <vector>

namespace ramsey {

enum class StepKind { seed, degenerate, new_layer };
std::string_view to_string(StepKind kind) noexcept;

struct RevealStep {
    StepKind kind;
    std::vector<Vertex> edge; // empty for the seed
    std::vector<Vertex> new_vertices;
    int layer; // 1-based layer the step belongs to
};

/// Layer-by-layer revealing of a connected vertex set. Vertices are original labels.
struct RevealTrace {
    int s = 0;
    std::vector<Vertex> vertices;          // S, sorted
    std::vector<std::vector<Vertex>> layers; // S_1 ⊂ ... ⊂ S_d, each sorted
    std::vector<RevealStep> steps;         // steps[0] is the seed {v_1}
    std::vector<int> arrival;              // per vertex of S (same order): index into steps
    std::vector<bool> degenerate;          // per vertex of S: added by a degenerate step

    int depth() const noexcept { return static_cast<int>(layers.size()); }
};

/// Runs the procedure: start from the smallest vertex; absorb the smallest edge
/// of H[S] meeting the current set in 2..s-1 vertices while one exists; close the
/// layer; then open a new one from the smallest vertex of the layer having an
/// edge of H[S] that meets the layer only in that vertex, via the smallest such
/// edge. Edges compare lexicographically as sorted tuples. Throws
/// std::invalid_argument when H[S] is not connected.
RevealTrace reveal_layers(const UniformHypergraph & h, std::span<const Vertex> s);

int count_degenerate(const RevealTrace & trace);
int count_degenerate_steps(const RevealTrace & trace);

/// |S| - 1 - (d - 1)(s - 1): the number of degenerate vertices the layer
/// structure implies.
int expected_degenerate(const RevealTrace & trace);

/// Vertices revealed up to and including the step that brings the number of
/// degenerate vertices to `k`, or empty if that never happens.
std::vector<Vertex> halted_prefix(const RevealTrace & trace, int k);

/// One JSON object per line: {"step","kind","edge","new_vertices","layer"}.
void write_trace_jsonl(std::ostream & out, const RevealTrace & trace);

} // namespace ramsey
