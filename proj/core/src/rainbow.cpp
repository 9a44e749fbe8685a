#include <ramsey/rainbow.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

void validate_star(const StarSpec & spec)
{
    if (spec.r < 2)
        throw std::invalid_argument("star needs r >= 2");
    auto colours = static_cast<std::size_t>(spec.r - 1);
    if (spec.removed.size() != colours || spec.flipped.size() != colours)
        throw std::invalid_argument("star needs one removed edge per colour");
    for (auto e : spec.removed)
        if (e >= spec.h.edge_count())
            throw std::invalid_argument("star: removed edge out of range");
}

GraphEdge arc(const Graph & h, std::size_t index)
{
    auto [lo, hi] = h.edge(index / 2);
    return index % 2 == 0 ? GraphEdge{lo, hi} : GraphEdge{hi, lo};
}

StarSpec star_from_arcs(const Graph & h, int r, const std::vector<std::size_t> & arcs)
{
    StarSpec spec{h, r, {}, {}};
    for (auto a : arcs) {
        spec.removed.push_back(a / 2);
        spec.flipped.push_back(a % 2 == 1);
    }
    return spec;
}

// Writes a copy of H∖e into `edges`, with the arc's tail on `u`, head on `v`
// and the other vertices on fresh labels from `next`.
std::vector<Vertex> glue_copy(const Graph & h, std::size_t removed, bool flipped, Vertex u, Vertex v, int colour,
    Vertex & next, std::vector<ColouredEdge> & edges)
{
    auto [lo, hi] = h.edge(removed);
    auto [a, b] = flipped ? GraphEdge{hi, lo} : GraphEdge{lo, hi};
    std::vector<Vertex> place(static_cast<std::size_t>(h.vertex_count()), -1);
    place[a] = u;
    place[b] = v;
    for (Vertex w = 0; w < h.vertex_count(); ++w)
        if (place[w] < 0)
            place[w] = next++;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (i != removed)
            edges.push_back({place[h.edge(i).first], place[h.edge(i).second], colour});
    return place;
}

class Injective {
public:
    explicit Injective(const Graph & h) :
        h_(h),
        image_(static_cast<std::size_t>(h.vertex_count()), -1),
        used_(static_cast<std::size_t>(h.vertex_count()), false)
    {
    }

    bool run(const Pins & pins)
    {
        for (auto [u, x] : pins) {
            if (image_[u] >= 0 && image_[u] != x)
                return false;
            if (image_[u] < 0 && used_[x])
                return false;
            image_[u] = x;
            used_[x] = true;
        }
        for (auto [u, x] : pins)
            if (!consistent(u, x))
                return false;
        return extend(0);
    }

    std::vector<Vertex> image() const { return image_; }

private:
    bool consistent(Vertex u, Vertex x) const
    {
        if (h_.degree(u) != h_.degree(x))
            return false;
        for (Vertex w = 0; w < h_.vertex_count(); ++w)
            if (w != u && image_[w] >= 0 && h_.has_edge(u, w) != h_.has_edge(x, image_[w]))
                return false;
        return true;
    }

    bool extend(Vertex u)
    {
        if (u == h_.vertex_count())
            return true;
        if (image_[u] >= 0)
            return extend(u + 1);
        for (Vertex x = 0; x < h_.vertex_count(); ++x) {
            if (used_[x] || !consistent(u, x))
                continue;
            image_[u] = x;
            used_[x] = true;
            if (extend(u + 1))
                return true;
            image_[u] = -1;
            used_[x] = false;
        }
        return false;
    }

    const Graph & h_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
};

// Steps the counter with the last digit fastest; sets done after the final tuple.
void odometer(std::vector<std::size_t> & digits, std::size_t base, bool & done)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base)
            return;
        digits[i] = 0;
    }
    done = true;
}

} // namespace

BuiltStar build_rainbow_star(const StarSpec & spec)
{
    validate_star(spec);
    BuiltStar out;
    std::vector<ColouredEdge> edges;
    Vertex next = 2;
    for (int j = 0; j + 1 < spec.r; ++j)
        out.placement.push_back(glue_copy(spec.h, spec.removed[j], spec.flipped[j], 0, 1, j + 1, next, edges));
    out.pattern = ColouredPattern{next, std::move(edges), {0, 1}};
    return out;
}

BuiltConstellation build_constellation(const ConstellationSpec & spec)
{
    const auto & h = spec.h;
    if (spec.stars.size() != h.edge_count() || spec.flipped.size() != h.edge_count())
        throw std::invalid_argument("constellation needs one star per base edge");
    BuiltConstellation out;
    std::vector<ColouredEdge> edges;
    Vertex next = h.vertex_count();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const auto & star = spec.stars[i];
        validate_star(star);
        if (star.r != spec.r || !(star.h == h))
            throw std::invalid_argument("constellation star built from a different H or r");
        auto [p, q] = h.edge(i);
        auto [x, y] = spec.flipped[i] ? GraphEdge{q, p} : GraphEdge{p, q};
        std::vector<std::vector<Vertex>> per_colour;
        for (int j = 0; j + 1 < spec.r; ++j)
            per_colour.push_back(glue_copy(h, star.removed[j], star.flipped[j], x, y, j + 1, next, edges));
        out.placement.push_back(std::move(per_colour));
    }
    std::vector<Vertex> base(static_cast<std::size_t>(h.vertex_count()));
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        base[v] = v;
    out.pattern = ColouredPattern{next, std::move(edges), std::move(base)};
    return out;
}

std::optional<std::vector<Vertex>> find_automorphism(const Graph & h, const Pins & pins)
{
    for (auto [u, x] : pins)
        if (u < 0 || x < 0 || u >= h.vertex_count() || x >= h.vertex_count())
            throw std::invalid_argument("automorphism pin out of range");
    Injective search(h);
    if (!search.run(pins))
        return std::nullopt;
    return search.image();
}

std::vector<int> arc_orbits(const Graph & h)
{
    const auto arcs = 2 * h.edge_count();
    std::vector<int> orbit(arcs, -1);
    int next = 0;
    for (std::size_t k = 0; k < arcs; ++k) {
        if (orbit[k] >= 0)
            continue;
        orbit[k] = next;
        auto [a, b] = arc(h, k);
        for (std::size_t m = k + 1; m < arcs; ++m) {
            if (orbit[m] >= 0)
                continue;
            auto [c, d] = arc(h, m);
            if (find_automorphism(h, {{a, c}, {b, d}}))
                orbit[m] = next;
        }
        ++next;
    }
    return orbit;
}

std::vector<StarSpec> enumerate_star_types(const Graph & h, int r, bool dedup)
{
    if (r < 2)
        throw std::invalid_argument("star types need r >= 2");
    const auto colours = static_cast<std::size_t>(r - 1);
    const auto arcs = 2 * h.edge_count();
    std::vector<StarSpec> out;
    if (!dedup) {
        std::vector<std::size_t> digits(colours, 0);
        for (bool done = arcs == 0; !done; odometer(digits, arcs, done))
            out.push_back(star_from_arcs(h, r, digits));
        return out;
    }

    auto orbit = arc_orbits(h);
    int orbits = 0;
    for (auto o : orbit)
        orbits = std::max(orbits, o + 1);
    std::vector<std::size_t> representative(static_cast<std::size_t>(orbits), arcs);
    for (std::size_t k = 0; k < arcs; ++k)
        representative[orbit[k]] = std::min(representative[orbit[k]], k);
    // Reversing an arc commutes with automorphisms, so it acts on orbit ids.
    std::vector<std::size_t> reversed(static_cast<std::size_t>(orbits));
    for (int o = 0; o < orbits; ++o)
        reversed[o] = static_cast<std::size_t>(orbit[representative[o] ^ 1]);

    std::vector<std::size_t> digits(colours, 0);
    for (bool done = orbits == 0; !done; odometer(digits, static_cast<std::size_t>(orbits), done)) {
        std::vector<std::size_t> swapped(colours);
        for (std::size_t j = 0; j < colours; ++j)
            swapped[j] = reversed[digits[j]];
        if (swapped < digits)
            continue; // the same star seen from the other end of its centre
        std::vector<std::size_t> chosen;
        for (auto o : digits)
            chosen.push_back(representative[o]);
        out.push_back(star_from_arcs(h, r, chosen));
    }
    return out;
}

RscReport rainbow_sc_property(const Graph & h, int r, const RscOptions & options)
{
    if (r < 2)
        throw std::invalid_argument("rainbow star-constellation property needs r >= 2");
    if (h.edge_count() == 0)
        throw std::invalid_argument("rainbow star-constellation property needs an edge");
    if (!h.is_connected())
        throw std::invalid_argument("rainbow star-constellation property needs a connected H");

    RscReport report;
    const auto colours = r - 1;
    const auto arcs = 2 * h.edge_count();

    // Cap check before materialising anything.
    double raw = 1.0;
    for (int j = 0; j < colours; ++j)
        raw *= static_cast<double>(arcs);
    if (!options.dedup && raw > static_cast<double>(options.max_star_types))
        return report;

    auto stars = enumerate_star_types(h, r, options.dedup);
    report.star_types = stars.size();
    if (stars.size() > options.max_star_types)
        return report;

    // Arcs worth trying as the removed edge of a source star: one per orbit suffices.
    std::vector<std::size_t> source_arcs;
    if (options.dedup) {
        auto orbit = arc_orbits(h);
        std::vector<bool> seen(arcs, false);
        for (std::size_t k = 0; k < arcs; ++k)
            if (!seen[orbit[k]]) {
                seen[orbit[k]] = true;
                source_arcs.push_back(k);
            }
    }
    else
        for (std::size_t k = 0; k < arcs; ++k)
            source_arcs.push_back(k);

    std::vector<ColouredPattern> minus_by_colour; // [colour-1][edge]
    Budget budget(options.limits);
    const auto whole = ColouredPattern::monochrome(h);

    try {
        for (const auto & spec : stars) {
            auto built = build_rainbow_star(spec);
            HomTarget target{built.pattern};
            const auto vs = built.pattern.vertex_count();
            const auto cells = static_cast<std::size_t>(vs) * static_cast<std::size_t>(vs);

            // link[j][x*vs+y]: arc and map realising colour j+1 with centre (x, y).
            struct Link {
                std::size_t arc = 0;
                std::vector<Vertex> map;
            };
            std::vector<std::vector<std::optional<Link>>> link(static_cast<std::size_t>(colours),
                std::vector<std::optional<Link>>(cells));
            for (int j = 0; j < colours; ++j)
                for (auto k : source_arcs) {
                    auto [c, d] = arc(h, k);
                    auto f = ColouredPattern::monochrome(h.without_edge(k / 2), j + 1);
                    for (Vertex x = 0; x < vs; ++x)
                        for (Vertex y = 0; y < vs; ++y) {
                            auto & cell = link[j][static_cast<std::size_t>(x) * vs + y];
                            if (cell)
                                continue;
                            if (auto map = find_homomorphism(f, target, {{c, x}, {d, y}}, &budget)) {
                                link[j][static_cast<std::size_t>(y) * vs + x] = Link{k ^ 1, *map};
                                cell = Link{k, std::move(*map)};
                            }
                        }
                }

            HomTarget relation(vs, {1});
            for (Vertex x = 0; x < vs; ++x)
                for (Vertex y = 0; y < vs; ++y) {
                    bool all = true;
                    for (int j = 0; j < colours && all; ++j)
                        all = link[j][static_cast<std::size_t>(x) * vs + y].has_value();
                    if (all)
                        relation.relate(x, y, 1);
                }

            RscStarResult result{spec, false, std::nullopt, {}};
            auto phi = find_homomorphism(whole, relation, {}, &budget);
            if (phi) {
                ConstellationSpec cs{h, r, {}, std::vector<bool>(h.edge_count(), false)};
                std::vector<std::vector<const Link *>> used(h.edge_count());
                for (std::size_t i = 0; i < h.edge_count(); ++i) {
                    auto [p, q] = h.edge(i);
                    auto cell = static_cast<std::size_t>((*phi)[p]) * vs + (*phi)[q];
                    std::vector<std::size_t> chosen;
                    for (int j = 0; j < colours; ++j) {
                        used[i].push_back(&*link[j][cell]);
                        chosen.push_back(link[j][cell]->arc);
                    }
                    cs.stars.push_back(star_from_arcs(h, r, chosen));
                }
                auto c = build_constellation(cs);
                std::vector<Vertex> map(static_cast<std::size_t>(c.pattern.vertex_count()), -1);
                for (Vertex v = 0; v < h.vertex_count(); ++v)
                    map[v] = (*phi)[v];
                for (std::size_t i = 0; i < h.edge_count(); ++i)
                    for (int j = 0; j < colours; ++j)
                        for (Vertex w = 0; w < h.vertex_count(); ++w)
                            map[c.placement[i][j][w]] = used[i][j]->map[w];
                if (!is_homomorphism(c.pattern, target, map))
                    throw std::logic_error("rainbow constellation witness failed verification");
                result.admits = true;
                result.constellation = std::move(cs);
                result.map = std::move(map);
            }
            report.stars.push_back(std::move(result));
            if (!phi) {
                report.verdict = Verdict::no;
                report.nodes = budget.nodes();
                return report;
            }
        }
        report.verdict = Verdict::yes;
    }
    catch (const BudgetExceeded &) {
        report.verdict = Verdict::inconclusive;
    }
    report.nodes = budget.nodes();
    return report;
}

Verdict has_rainbow_sc_property(const Graph & h, int r)
{
    return rainbow_sc_property(h, r).verdict;
}

std::optional<std::vector<Vertex>> direct_constellation_search(const StarSpec & star, ConstellationSpec * found)
{
    const auto & h = star.h;
    const auto colours = static_cast<std::size_t>(star.r - 1);
    const auto arcs = 2 * h.edge_count();
    HomTarget target{build_rainbow_star(star).pattern};
    // One digit per (base edge, colour) for the removed arc, one per base edge for the flip.
    const auto per_edge = colours + 1;
    std::vector<std::size_t> digits(h.edge_count() * per_edge, 0);
    bool done = false;
    while (!done) {
        bool valid = true;
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            if (digits[i * per_edge + colours] > 1)
                valid = false;
        if (valid) {
            ConstellationSpec cs{h, star.r, {}, {}};
            for (std::size_t i = 0; i < h.edge_count(); ++i) {
                std::vector<std::size_t> chosen(digits.begin() + static_cast<std::ptrdiff_t>(i * per_edge),
                    digits.begin() + static_cast<std::ptrdiff_t>(i * per_edge + colours));
                cs.stars.push_back(star_from_arcs(h, star.r, chosen));
                cs.flipped.push_back(digits[i * per_edge + colours] == 1);
            }
            auto c = build_constellation(cs);
            if (auto map = find_homomorphism(c.pattern, target)) {
                if (found)
                    *found = std::move(cs);
                return map;
            }
        }
        odometer(digits, arcs, done);
    }
    return std::nullopt;
}

} // namespace ramsey
