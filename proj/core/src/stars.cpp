#include <ramsey/stars.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

void require_r(int r)
{
    if (r < 2 || r > max_colours)
        throw std::invalid_argument("stars need 2 <= r <= 31");
}

} // namespace

void for_each_star_at(const UniformHypergraph & h, int r, Vertex v, const std::function<void(const Star &)> & visit)
{
    require_r(r);
    const auto n = static_cast<std::size_t>(h.vertex_count());
    auto incident = h.incident(v);
    std::vector<int> used(n, 0); // vertices other than v covered by chosen edges
    Star star{v, {}, {}};

    auto rec = [&](auto && self, std::size_t from) -> void {
        if (static_cast<int>(star.edges.size()) == r - 1) {
            star.support.clear();
            for (auto e : star.edges)
                star.support.insert(star.support.end(), h.edge(e).begin(), h.edge(e).end());
            std::sort(star.support.begin(), star.support.end());
            star.support.erase(std::unique(star.support.begin(), star.support.end()), star.support.end());
            visit(star);
            return;
        }
        for (std::size_t i = from; i < incident.size(); ++i) {
            auto e = h.edge(incident[i]);
            bool clash = std::any_of(e.begin(), e.end(), [&](Vertex u) { return u != v && used[u]; });
            if (clash)
                continue;
            for (auto u : e)
                if (u != v)
                    used[u] = 1;
            star.edges.push_back(incident[i]);
            self(self, i + 1);
            star.edges.pop_back();
            for (auto u : e)
                if (u != v)
                    used[u] = 0;
        }
    };
    rec(rec, 0);
}

std::uint64_t count_stars(const UniformHypergraph & h, int r)
{
    std::uint64_t total = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for_each_star_at(h, r, v, [&](const Star &) { ++total; });
    return total;
}

int rainbow_missing_colour(const UniformHypergraph & h, int r, const Star & star, const PartialColouring & psi)
{
    std::uint32_t seen = 0;
    for (auto e : star.edges) {
        int colour = 0;
        for (auto u : h.edge(e)) {
            if (u == star.centre)
                continue;
            int c = psi[u];
            if (c <= 0 || c > r || (colour != 0 && c != colour))
                return 0;
            colour = c;
        }
        if (seen >> colour & 1)
            return 0;
        seen |= 1u << colour;
    }
    for (int i = 1; i <= r; ++i)
        if (!(seen >> i & 1))
            return i;
    return 0;
}

namespace {

// Stars at each centre of a base edge, tagged by missing colour (0 when only
// the plain count matters), then a disjointness backtrack.
struct ConstellationCounter {
    const UniformHypergraph & h;
    int r;
    const PartialColouring * psi;
    std::vector<int> used;

    std::vector<std::uint64_t> count_at(std::span<const Vertex> base)
    {
        std::vector<std::vector<std::pair<std::vector<Vertex>, int>>> options(base.size());
        for (std::size_t j = 0; j < base.size(); ++j) {
            for_each_star_at(h, r, base[j], [&](const Star & star) {
                // Another centre inside this support would break disjointness.
                for (auto c : base)
                    if (c != base[j] && std::binary_search(star.support.begin(), star.support.end(), c))
                        return;
                int tag = 0;
                if (psi) {
                    tag = rainbow_missing_colour(h, r, star, *psi);
                    if (tag == 0)
                        return;
                }
                options[j].emplace_back(star.support, tag);
            });
            if (options[j].empty())
                return std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 1, 0);
        }
        std::vector<std::uint64_t> totals(static_cast<std::size_t>(r) + 1, 0);
        auto rec = [&](auto && self, std::size_t j, int tag) -> void {
            if (j == base.size()) {
                ++totals[static_cast<std::size_t>(tag)];
                return;
            }
            for (const auto & [support, t] : options[j]) {
                if (j > 0 && t != tag)
                    continue;
                if (std::any_of(support.begin(), support.end(), [&](Vertex u) { return used[u] != 0; }))
                    continue;
                for (auto u : support)
                    used[u] = 1;
                self(self, j + 1, t);
                for (auto u : support)
                    used[u] = 0;
            }
        };
        rec(rec, 0, 0);
        return totals;
    }
};

} // namespace

std::uint64_t count_constellations(const UniformHypergraph & h, int r)
{
    require_r(r);
    ConstellationCounter counter{h, r, nullptr, std::vector<int>(static_cast<std::size_t>(h.vertex_count()), 0)};
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        total += counter.count_at(h.edge(e))[0];
    return total;
}

RainbowReport count_rainbow(const UniformHypergraph & h, int r, const PartialColouring & psi)
{
    require_r(r);
    if (psi.size() != static_cast<std::size_t>(h.vertex_count()))
        throw std::invalid_argument("colouring length differs from the vertex count");
    RainbowReport report;
    report.stars.per_colour.assign(static_cast<std::size_t>(r), 0);
    report.constellations.per_colour.assign(static_cast<std::size_t>(r), 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for_each_star_at(h, r, v, [&](const Star & star) {
            if (int i = rainbow_missing_colour(h, r, star, psi)) {
                ++report.stars.any;
                ++report.stars.per_colour[static_cast<std::size_t>(i - 1)];
            }
        });
    ConstellationCounter counter{h, r, &psi, std::vector<int>(static_cast<std::size_t>(h.vertex_count()), 0)};
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto totals = counter.count_at(h.edge(e));
        for (int i = 1; i <= r; ++i) {
            report.constellations.per_colour[static_cast<std::size_t>(i - 1)] += totals[static_cast<std::size_t>(i)];
            report.constellations.any += totals[static_cast<std::size_t>(i)];
        }
    }
    return report;
}

} // namespace ramsey
