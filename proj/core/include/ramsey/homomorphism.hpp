#pragma once

#include <ramsey/common.hpp>
#include <ramsey/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

struct ColouredEdge {
    Vertex u;
    Vertex v;
    int colour;

    friend auto operator<=>(const ColouredEdge &, const ColouredEdge &) = default;
};

/// Edge-coloured simple graph. Colours are positive integers. The distinguished
/// vertices (a star's centre pair, a constellation's base) ride along for callers.
class ColouredPattern {
public:
    ColouredPattern() = default;
    ColouredPattern(Vertex n, std::vector<ColouredEdge> edges, std::vector<Vertex> distinguished = {});
    /// Every edge of g in one colour.
    static ColouredPattern monochrome(const Graph & g, int colour = 1);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const ColouredEdge> edges() const noexcept { return edges_; }
    const std::vector<Vertex> & distinguished() const noexcept { return distinguished_; }
    void set_distinguished(std::vector<Vertex> d) { distinguished_ = std::move(d); }

    /// Colour of uv, or 0 when absent.
    int colour(Vertex u, Vertex v) const;
    Graph underlying() const;

    friend bool operator==(const ColouredPattern & a, const ColouredPattern & b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<ColouredEdge> edges_; // u < v, sorted
    std::vector<Vertex> distinguished_;
};

/// Target of a homomorphism search: one symmetric relation per colour, loops
/// allowed. Built from a ColouredPattern or directly from relations.
class HomTarget {
public:
    explicit HomTarget(const ColouredPattern & g);
    HomTarget(Vertex n, std::vector<int> colours);

    /// Adds x ~ y (and y ~ x) in the given colour; x == y gives a loop.
    void relate(Vertex x, Vertex y, int colour);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    /// Index of a colour in this target, or -1 if the colour never occurs.
    int colour_slot(int colour) const;
    const std::uint64_t * row(int slot, Vertex x) const { return &bits_[(static_cast<std::size_t>(slot) * n_ + x) * words_]; }
    bool related(int slot, Vertex x, Vertex y) const { return (row(slot, x)[y >> 6] >> (y & 63)) & 1; }

private:
    Vertex n_;
    std::size_t words_;
    std::vector<int> colours_;
    std::vector<std::uint64_t> bits_;
};

using Pins = std::vector<std::pair<Vertex, Vertex>>;

/// Complete backtracking search for a colour-preserving map extending the pins.
/// Vertices are chosen most-constrained first with ties broken by index, and
/// candidate images are tried in increasing order, so the witness is
/// deterministic. Throws BudgetExceeded when the budget runs out.
std::optional<std::vector<Vertex>> find_homomorphism(const ColouredPattern & f, const HomTarget & g, const Pins & pins = {},
    Budget * budget = nullptr);
std::optional<std::vector<Vertex>> find_homomorphism(const ColouredPattern & f, const ColouredPattern & g,
    const Pins & pins = {}, Budget * budget = nullptr);

bool is_homomorphism(const ColouredPattern & f, const HomTarget & g, std::span<const Vertex> map);
bool is_homomorphism(const ColouredPattern & f, const ColouredPattern & g, std::span<const Vertex> map);

/// |Hom(F, G)|, exact. Components are counted separately and multiplied; within a
/// component partial counts are memoised on the images of the search frontier.
BigInt hom_count(const ColouredPattern & f, const HomTarget & g, Budget * budget = nullptr);
BigInt hom_count(const ColouredPattern & f, const ColouredPattern & g, Budget * budget = nullptr);
BigInt hom_count(const Graph & f, const Graph & g);

/// |Hom(F^(k), G)| without building the blowup. The k copies of a vertex a land
/// on some set T_a (surj(k, |T_a|) ways), and copies of adjacent a, b are all
/// joined iff T_a x T_b lies in E(G). Requires v_G <= 20.
BigInt hom_count_blowup(const Graph & f, int k, const Graph & g);

/// |Hom(F, G)| / v_G^{v_F}.
BigRational hom_density(const Graph & f, const Graph & g);

/// k-blowup: vertex a becomes a*k .. a*k+k-1.
Graph blowup(const Graph & f, int k);
ColouredPattern blowup(const ColouredPattern & f, int k);

} // namespace ramsey
