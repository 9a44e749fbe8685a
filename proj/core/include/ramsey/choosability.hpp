#pragma once

#include <ramsey/colouring.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

struct ChoosabilityOptions {
    /// Colours available for the lists. Two lists mention at most four colours,
    /// which is why four is the default.
    int universe = 4;
    /// Components larger than this (after peeling) give an inconclusive verdict.
    Vertex vertex_cap = 12;
    SearchLimits limits{};
};

struct ChoosabilityResult {
    /// yes: every 2-list assignment admits a proper list colouring.
    Verdict verdict = Verdict::inconclusive;
    /// An assignment with no proper list colouring, on all vertices, when the verdict is no.
    std::optional<ListAssignment> bad;
    std::uint64_t assignments = 0;
    std::uint64_t nodes = 0;
};

/// Decides 2-choosability from the palette [1, universe].
///
/// Vertices in at most one edge are peeled first (such a vertex can always take
/// the list colour its edge does not force), the rest splits into components,
/// and each component runs through all list assignments up to renaming of
/// colours: lists are enumerated in vertex order with new colours introduced
/// in increasing order.
ChoosabilityResult is_2_choosable(const UniformHypergraph & h, const ChoosabilityOptions & options = {});

/// Whether the lists admit a proper list colouring.
bool list_colourable(const UniformHypergraph & h, const ListAssignment & lists);

/// Number of canonical assignments visited for n vertices and the given universe.
std::uint64_t canonical_assignment_count(Vertex n, int universe);

/// Calls visit(lists) for every canonical assignment on n vertices.
template <typename Visit>
void for_each_canonical_assignment(Vertex n, int universe, Visit && visit);

struct NonChoosableSet {
    std::vector<Vertex> vertices;
    bool minimal = false;
};

struct NonChoosableReport {
    Verdict verdict = Verdict::yes; // inconclusive when some check ran out of budget
    std::vector<NonChoosableSet> sets;
};

/// Every W with |W| <= k and H[W] connected and not 2-choosable, ordered by size
/// then lexicographically. minimal: every W minus one vertex is 2-choosable.
NonChoosableReport find_non_choosable_subsets(const UniformHypergraph & h, int k, const ChoosabilityOptions & options = {});

/// Vertex sets W with 2 <= |W| <= k such that H[W] is connected, as sorted vectors.
std::vector<std::vector<Vertex>> connected_vertex_sets(const UniformHypergraph & h, int k);

/// 2-list edge colourings of G without a monochromatic copy of H exist for every
/// assignment of lists.
ChoosabilityResult is_2_choosable_wrt(const Graph & g, const Graph & h, const ChoosabilityOptions & options = {});

/// Some 2-list assignment on Y forces a monochromatic Schur triple {x, y, x+y} mod N.
/// Here the verdict is yes when the property holds, and `bad` is the forcing
/// assignment on the sorted distinct elements of Y.
ChoosabilityResult list_schur(const std::vector<Vertex> & y, Vertex modulus, const ChoosabilityOptions & options = {});
/// Some 2-list assignment on Y forces a monochromatic k-term progression mod N.
ChoosabilityResult list_vdw(const std::vector<Vertex> & y, Vertex modulus, int k, const ChoosabilityOptions & options = {});

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_canonical_assignment(Vertex n, int universe, Visit && visit)
{
    std::vector<std::array<int, 2>> lists(static_cast<std::size_t>(n));
    auto rec = [&](auto && self, Vertex v, int highest) -> bool {
        if (v == n)
            return visit(static_cast<const std::vector<std::array<int, 2>> &>(lists));
        for (int a = 1; a <= std::min(universe, highest + 1); ++a)
            for (int b = a + 1; b <= std::min(universe, std::max(highest, a) + 1); ++b) {
                lists[v] = {a, b};
                if (!self(self, v + 1, std::max(highest, b)))
                    return false;
            }
        return true;
    };
    rec(rec, 0, 0);
}

} // namespace ramsey
