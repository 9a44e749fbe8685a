#pragma once

#include <ramsey/colouring.hpp>
#include <ramsey/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace ramsey {

/// r - 1 edges pairwise meeting exactly in the centre. For r = 2 the single
/// edge carries a distinguished centre, so an edge gives s stars.
struct Star {
    Vertex centre;
    std::vector<std::uint32_t> edges; // ascending edge indices
    std::vector<Vertex> support;      // union of the edges, sorted
};

/// Calls visit(star) for every (r-1)-star centred at v, edges in ascending order.
void for_each_star_at(const UniformHypergraph & h, int r, Vertex v, const std::function<void(const Star &)> & visit);

std::uint64_t count_stars(const UniformHypergraph & h, int r);

/// s stars with pairwise disjoint supports whose centres form an edge. Brute
/// force over the stars at each base edge, so only meant for small instances.
std::uint64_t count_constellations(const UniformHypergraph & h, int r);

struct RainbowCount {
    std::uint64_t any = 0;
    std::vector<std::uint64_t> per_colour; // index i-1 counts i-rainbow objects
};

struct RainbowReport {
    RainbowCount stars;
    RainbowCount constellations;
};

/// The colour i the star misses, or 0 when the star is not rainbow: each edge
/// minus the centre is monochromatic under psi (colour 0 = uncoloured never
/// qualifies) and the r - 1 edge colours are distinct.
int rainbow_missing_colour(const UniformHypergraph & h, int r, const Star & star, const PartialColouring & psi);

/// A rainbow star misses exactly one colour, so the per-colour counts add up to `any`.
RainbowReport count_rainbow(const UniformHypergraph & h, int r, const PartialColouring & psi);

} // namespace ramsey
