#pragma once

#include <ramsey/common.hpp>
#include <ramsey/graph.hpp>
#include <ramsey/homomorphism.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// A rainbow star of H in r colours: for colour j = 1..r-1 a copy of H minus
/// edge removed[j-1], glued on that missing edge. With flipped false the
/// smaller endpoint of the removed edge sits on centre vertex 0, otherwise on 1.
struct StarSpec {
    Graph h;
    int r = 2;
    std::vector<std::size_t> removed;
    std::vector<bool> flipped;
};

/// A rainbow constellation: a base copy of H (vertices 0..v_H-1) and, for each
/// base edge, a star whose centre (0, 1) lands on the edge's (smaller, larger)
/// endpoints, or the reverse when flipped.
struct ConstellationSpec {
    Graph h;
    int r = 2;
    std::vector<StarSpec> stars;
    std::vector<bool> flipped;
};

/// Pattern plus where each vertex of each glued copy of H went.
struct BuiltStar {
    ColouredPattern pattern;
    std::vector<std::vector<Vertex>> placement; // [colour-1][vertex of H]
};

struct BuiltConstellation {
    ColouredPattern pattern;
    std::vector<std::vector<std::vector<Vertex>>> placement; // [base edge][colour-1][vertex of H]
};

/// Generic gluing: (v_H - 2)(r - 1) + 2 vertices, centre pair distinguished.
BuiltStar build_rainbow_star(const StarSpec & spec);
/// Generic gluing: e_H (v_H - 2)(r - 1) + v_H vertices, base distinguished.
BuiltConstellation build_constellation(const ConstellationSpec & spec);

/// Injective search for an automorphism of H extending the pins.
std::optional<std::vector<Vertex>> find_automorphism(const Graph & h, const Pins & pins);

/// Orbit id of each ordered edge under Aut(H). Arc 2i is edge i read
/// (smaller, larger) and arc 2i+1 the reverse.
std::vector<int> arc_orbits(const Graph & h);

struct RscOptions {
    bool dedup = true;
    std::size_t max_star_types = 20000;
    SearchLimits limits{};
};

struct RscStarResult {
    StarSpec star;
    bool admits = false;
    std::optional<ConstellationSpec> constellation;
    std::vector<Vertex> map; // C → S, verified
};

struct RscReport {
    Verdict verdict = Verdict::inconclusive;
    std::size_t star_types = 0;
    std::vector<RscStarResult> stars; // in enumeration order, stops at the first failure
    std::uint64_t nodes = 0;
};

/// Every star type admits a rainbow constellation C with a homomorphism C → S.
///
/// Constellation stars meet only in base vertices, so a map C → S is a map of
/// the base into S together with, for each base edge, some star S' that maps
/// to S with its centre on the image of that edge. Per star S this reduces to
/// a homomorphism from H into the loopy relation R_S(x, y) = "some S' maps to S
/// with centre (x, y)", and R_S splits colour by colour.
RscReport rainbow_sc_property(const Graph & h, int r, const RscOptions & options = {});
Verdict has_rainbow_sc_property(const Graph & h, int r);

/// Brute-force reference: tries every constellation spec against the star.
/// Exponential; only for tiny H.
std::optional<std::vector<Vertex>> direct_constellation_search(const StarSpec & star, ConstellationSpec * found = nullptr);

/// All stars of H in r colours (one per tuple of removed arcs), optionally up
/// to isomorphism.
std::vector<StarSpec> enumerate_star_types(const Graph & h, int r, bool dedup);

} // namespace ramsey
