#include <ramsey/homomorphism.hpp>

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

ColouredPattern::ColouredPattern(Vertex n, std::vector<ColouredEdge> edges, std::vector<Vertex> distinguished) :
    n_(n),
    edges_(std::move(edges)),
    distinguished_(std::move(distinguished))
{
    if (n < 0)
        throw std::invalid_argument("coloured pattern: negative vertex count");
    for (auto & e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("coloured pattern: endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("coloured pattern: loop");
        if (e.colour < 1)
            throw std::invalid_argument("coloured pattern: colours are positive");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("coloured pattern: pair carries two edges");
    for (auto d : distinguished_)
        if (d < 0 || d >= n)
            throw std::invalid_argument("coloured pattern: distinguished vertex out of range");
}

ColouredPattern ColouredPattern::monochrome(const Graph & g, int colour)
{
    std::vector<ColouredEdge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({u, v, colour});
    return ColouredPattern{g.vertex_count(), std::move(edges)};
}

int ColouredPattern::colour(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), ColouredEdge{u, v, 0});
    if (it != edges_.end() && it->u == u && it->v == v)
        return it->colour;
    return 0;
}

Graph ColouredPattern::underlying() const
{
    std::vector<GraphEdge> plain;
    for (const auto & e : edges_)
        plain.emplace_back(e.u, e.v);
    return Graph{n_, std::move(plain)};
}

HomTarget::HomTarget(Vertex n, std::vector<int> colours) :
    n_(n),
    words_((static_cast<std::size_t>(n) + 63) / 64),
    colours_(std::move(colours)),
    bits_(colours_.size() * static_cast<std::size_t>(n) * words_, 0)
{
}

HomTarget::HomTarget(const ColouredPattern & g) :
    HomTarget(g.vertex_count(), [&] {
        std::vector<int> cs;
        for (const auto & e : g.edges())
            cs.push_back(e.colour);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return cs;
    }())
{
    for (const auto & e : g.edges())
        relate(e.u, e.v, e.colour);
}

int HomTarget::colour_slot(int colour) const
{
    auto it = std::find(colours_.begin(), colours_.end(), colour);
    return it == colours_.end() ? -1 : static_cast<int>(it - colours_.begin());
}

void HomTarget::relate(Vertex x, Vertex y, int colour)
{
    auto slot = colour_slot(colour);
    if (slot < 0)
        throw std::invalid_argument("hom target: unknown colour");
    auto set = [&](Vertex a, Vertex b) {
        bits_[(static_cast<std::size_t>(slot) * n_ + a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    };
    set(x, y);
    set(y, x);
}

namespace {

struct Arc {
    Vertex to;
    int slot;
};

// Pattern adjacency translated into target colour slots. `feasible` is false
// when F uses a colour the target lacks entirely.
struct Prepared {
    std::vector<std::vector<Arc>> arcs;
    bool feasible = true;
};

Prepared prepare(const ColouredPattern & f, const HomTarget & g)
{
    Prepared p;
    p.arcs.resize(static_cast<std::size_t>(f.vertex_count()));
    for (const auto & e : f.edges()) {
        auto slot = g.colour_slot(e.colour);
        if (slot < 0) {
            p.feasible = false;
            continue;
        }
        p.arcs[e.u].push_back({e.v, slot});
        p.arcs[e.v].push_back({e.u, slot});
    }
    return p;
}

class DomainSet {
public:
    DomainSet(std::size_t vars, std::size_t words) : words_(words), bits_(vars * words, 0) {}

    std::uint64_t * operator[](std::size_t v) { return &bits_[v * words_]; }
    const std::uint64_t * operator[](std::size_t v) const { return &bits_[v * words_]; }

    void fill(std::size_t v, Vertex n)
    {
        auto * d = (*this)[v];
        for (std::size_t w = 0; w < words_; ++w) {
            auto lo = static_cast<Vertex>(w * 64);
            d[w] = n - lo >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - lo)) - 1;
        }
    }

    void single(std::size_t v, Vertex x)
    {
        auto * d = (*this)[v];
        std::fill(d, d + words_, 0);
        d[x >> 6] = std::uint64_t{1} << (x & 63);
    }

    // In-place intersection; returns false when the domain empties.
    bool restrict(std::size_t v, const std::uint64_t * mask)
    {
        auto * d = (*this)[v];
        std::uint64_t any = 0;
        for (std::size_t w = 0; w < words_; ++w)
            any |= (d[w] &= mask[w]);
        return any != 0;
    }

    std::size_t size(std::size_t v) const
    {
        const auto * d = (*this)[v];
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w)
            c += static_cast<std::size_t>(std::popcount(d[w]));
        return c;
    }

    template <typename Visit>
    bool each(std::size_t v, Visit && visit) const
    {
        const auto * d = (*this)[v];
        for (std::size_t w = 0; w < words_; ++w)
            for (auto m = d[w]; m != 0; m &= m - 1)
                if (!visit(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)))))
                    return false;
        return true;
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Vertices of G carrying at least one relation in each slot.
std::vector<std::vector<std::uint64_t>> support_masks(const HomTarget & g, int slots)
{
    std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(slots), std::vector<std::uint64_t>(g.words(), 0));
    for (int c = 0; c < slots; ++c)
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            const auto * row = g.row(c, x);
            for (std::size_t w = 0; w < g.words(); ++w)
                if (row[w]) {
                    out[c][x >> 6] |= std::uint64_t{1} << (x & 63);
                    break;
                }
        }
    return out;
}

int slot_count(const Prepared & p)
{
    int slots = 0;
    for (const auto & list : p.arcs)
        for (auto a : list)
            slots = std::max(slots, a.slot + 1);
    return slots;
}

// Initial domains: everything, narrowed to vertices with the right colours and by the pins.
bool initial_domains(const ColouredPattern & f, const HomTarget & g, const Prepared & p, const Pins & pins, DomainSet & dom)
{
    auto support = support_masks(g, slot_count(p));
    for (Vertex u = 0; u < f.vertex_count(); ++u) {
        dom.fill(u, g.vertex_count());
        for (auto a : p.arcs[u])
            if (!dom.restrict(u, support[a.slot].data()))
                return false;
    }
    for (auto [u, x] : pins) {
        if (u < 0 || u >= f.vertex_count() || x < 0 || x >= g.vertex_count())
            throw std::invalid_argument("pin out of range");
        std::vector<std::uint64_t> only(g.words(), 0);
        only[x >> 6] = std::uint64_t{1} << (x & 63);
        if (!dom.restrict(u, only.data()))
            return false;
    }
    return true;
}

class Finder {
public:
    Finder(const ColouredPattern & f, const HomTarget & g, const Prepared & p, Budget * budget) :
        f_(f),
        g_(g),
        p_(p),
        budget_(budget),
        image_(static_cast<std::size_t>(f.vertex_count()), -1)
    {
    }

    bool run(DomainSet dom) { return search(dom, 0); }
    std::vector<Vertex> image() const { return image_; }

private:
    bool search(const DomainSet & dom, Vertex assigned)
    {
        if (assigned == f_.vertex_count())
            return true;
        Vertex pick = -1;
        std::size_t best = 0;
        for (Vertex u = 0; u < f_.vertex_count(); ++u)
            if (image_[u] < 0) {
                auto sz = dom.size(u);
                if (pick < 0 || sz < best) {
                    pick = u;
                    best = sz;
                }
            }
        bool found = false;
        dom.each(pick, [&](Vertex x) {
            if (budget_)
                budget_->tick();
            DomainSet next = dom;
            next.single(pick, x);
            for (auto a : p_.arcs[pick])
                if (image_[a.to] < 0 && !next.restrict(a.to, g_.row(a.slot, x)))
                    return true;
            image_[pick] = x;
            if (search(next, assigned + 1)) {
                found = true;
                return false;
            }
            image_[pick] = -1;
            return true;
        });
        return found;
    }

    const ColouredPattern & f_;
    const HomTarget & g_;
    const Prepared & p_;
    Budget * budget_;
    std::vector<Vertex> image_;
};

struct KeyHash {
    std::size_t operator()(const std::vector<Vertex> & key) const { return boost::hash_range(key.begin(), key.end()); }
};

// Counts maps of one connected component along a fixed order, memoising on the
// images of already-placed vertices that still have unplaced neighbours.
class Counter {
public:
    Counter(const HomTarget & g, const Prepared & p, std::vector<Vertex> order, Budget * budget) :
        g_(g),
        p_(p),
        order_(std::move(order)),
        budget_(budget),
        position_(p.arcs.size(), -1),
        image_(p.arcs.size(), -1),
        memo_(order_.size())
    {
        for (std::size_t i = 0; i < order_.size(); ++i)
            position_[order_[i]] = static_cast<int>(i);
        boundary_.resize(order_.size());
        free_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            auto u = order_[i];
            free_[i] = std::all_of(p.arcs[u].begin(), p.arcs[u].end(), [&](Arc a) {
                return position_[a.to] < static_cast<int>(i);
            });
            for (std::size_t j = 0; j < i; ++j) {
                auto w = order_[j];
                bool open = std::any_of(p.arcs[w].begin(), p.arcs[w].end(), [&](Arc a) {
                    return position_[a.to] >= static_cast<int>(i);
                });
                if (open)
                    boundary_[i].push_back(w);
            }
        }
    }

    BigInt run(const DomainSet & dom) { return count(dom, 0); }

private:
    BigInt count(const DomainSet & dom, std::size_t depth)
    {
        if (depth == order_.size())
            return 1;
        if (budget_)
            budget_->tick();
        auto u = order_[depth];
        if (free_[depth])
            return BigInt(dom.size(u)) * count(dom, depth + 1);

        std::vector<Vertex> key;
        key.reserve(boundary_[depth].size());
        for (auto w : boundary_[depth])
            key.push_back(image_[w]);
        auto & table = memo_[depth];
        if (auto it = table.find(key); it != table.end())
            return it->second;

        BigInt total = 0;
        dom.each(u, [&](Vertex x) {
            DomainSet next = dom;
            next.single(u, x);
            for (auto a : p_.arcs[u])
                if (position_[a.to] > static_cast<int>(depth) && !next.restrict(a.to, g_.row(a.slot, x)))
                    return true;
            image_[u] = x;
            total += count(next, depth + 1);
            image_[u] = -1;
            return true;
        });
        table.emplace(std::move(key), total);
        return total;
    }

    const HomTarget & g_;
    const Prepared & p_;
    std::vector<Vertex> order_;
    Budget * budget_;
    std::vector<int> position_;
    std::vector<Vertex> image_;
    std::vector<std::vector<Vertex>> boundary_;
    std::vector<bool> free_;
    std::vector<std::unordered_map<std::vector<Vertex>, BigInt, KeyHash>> memo_;
};

// Greedy order for one component: start at the highest-degree vertex, then
// repeatedly take the vertex with most placed neighbours (fewest unplaced ones on ties).
std::vector<Vertex> counting_order(const Prepared & p, const std::vector<Vertex> & component)
{
    std::vector<bool> placed(p.arcs.size(), false);
    std::vector<Vertex> order;
    auto score = [&](Vertex u) {
        int in = 0, out = 0;
        for (auto a : p.arcs[u])
            (placed[a.to] ? in : out) += 1;
        return std::pair{in, -out};
    };
    while (order.size() < component.size()) {
        Vertex pick = -1;
        std::pair<int, int> best{};
        for (auto u : component)
            if (!placed[u]) {
                auto sc = order.empty() ? std::pair{static_cast<int>(p.arcs[u].size()), 0} : score(u);
                if (pick < 0 || sc > best) {
                    pick = u;
                    best = sc;
                }
            }
        placed[pick] = true;
        order.push_back(pick);
    }
    return order;
}

std::vector<std::vector<Vertex>> pattern_components(const Prepared & p)
{
    auto n = p.arcs.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = static_cast<int>(out.size());
        out.push_back({static_cast<Vertex>(s)});
        for (std::size_t head = 0; head < out.back().size(); ++head)
            for (auto a : p.arcs[out.back()[head]])
                if (comp[a.to] < 0) {
                    comp[a.to] = comp[s];
                    out.back().push_back(a.to);
                }
    }
    return out;
}

} // namespace

std::optional<std::vector<Vertex>> find_homomorphism(const ColouredPattern & f, const HomTarget & g, const Pins & pins,
    Budget * budget)
{
    auto p = prepare(f, g);
    if (!p.feasible)
        return std::nullopt;
    if (f.vertex_count() > 0 && g.vertex_count() == 0)
        return std::nullopt;
    DomainSet dom(static_cast<std::size_t>(f.vertex_count()), g.words());
    if (!initial_domains(f, g, p, pins, dom))
        return std::nullopt;
    Finder finder(f, g, p, budget);
    if (!finder.run(std::move(dom)))
        return std::nullopt;
    return finder.image();
}

std::optional<std::vector<Vertex>> find_homomorphism(const ColouredPattern & f, const ColouredPattern & g, const Pins & pins,
    Budget * budget)
{
    return find_homomorphism(f, HomTarget{g}, pins, budget);
}

bool is_homomorphism(const ColouredPattern & f, const HomTarget & g, std::span<const Vertex> map)
{
    if (map.size() != static_cast<std::size_t>(f.vertex_count()))
        return false;
    for (auto x : map)
        if (x < 0 || x >= g.vertex_count())
            return false;
    for (const auto & e : f.edges()) {
        auto slot = g.colour_slot(e.colour);
        if (slot < 0 || !g.related(slot, map[e.u], map[e.v]))
            return false;
    }
    return true;
}

bool is_homomorphism(const ColouredPattern & f, const ColouredPattern & g, std::span<const Vertex> map)
{
    return is_homomorphism(f, HomTarget{g}, map);
}

BigInt hom_count(const ColouredPattern & f, const HomTarget & g, Budget * budget)
{
    auto p = prepare(f, g);
    if (!p.feasible)
        return 0;
    DomainSet dom(static_cast<std::size_t>(f.vertex_count()), g.words());
    if (!initial_domains(f, g, p, {}, dom))
        return 0;
    BigInt total = 1;
    for (const auto & component : pattern_components(p)) {
        Counter counter(g, p, counting_order(p, component), budget);
        total *= counter.run(dom);
        if (total == 0)
            break;
    }
    return total;
}

BigInt hom_count(const ColouredPattern & f, const ColouredPattern & g, Budget * budget)
{
    return hom_count(f, HomTarget{g}, budget);
}

BigInt hom_count_blowup(const Graph & f, int k, const Graph & g)
{
    if (k < 1)
        throw std::invalid_argument("blowup factor must be positive");
    const auto vg = g.vertex_count();
    if (vg > 20)
        throw std::invalid_argument("hom_count_blowup: host graph too large");
    if (f.vertex_count() == 0)
        return 1;
    if (vg == 0)
        return 0;

    // Candidate images: nonempty vertex sets of size <= k, with surjection counts as weights.
    std::vector<std::uint32_t> sets;
    std::vector<BigInt> weight;
    std::vector<BigInt> surj(static_cast<std::size_t>(std::min<int>(k, vg)) + 1);
    for (std::size_t m = 1; m < surj.size(); ++m) {
        BigInt total = 0, binom = 1;
        for (std::size_t j = 0; j <= m; ++j) {
            BigInt term = binom * boost::multiprecision::pow(BigInt(m - j), k);
            total += j % 2 ? -term : term;
            binom = binom * (m - j) / (j + 1);
        }
        surj[m] = total;
    }
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(vg), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    for (std::uint32_t t = 1; t < (1u << vg); ++t)
        if (static_cast<std::size_t>(std::popcount(t)) < surj.size()) {
            sets.push_back(t);
            weight.push_back(surj[static_cast<std::size_t>(std::popcount(t))]);
        }
    // common[i]: vertices adjacent to every vertex of sets[i].
    std::vector<std::uint32_t> common(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::uint32_t c = (1u << vg) - 1;
        for (Vertex x = 0; x < vg; ++x)
            if ((sets[i] >> x) & 1)
                c &= nbr[x];
        common[i] = c;
    }

    const auto vf = static_cast<std::size_t>(f.vertex_count());
    std::vector<std::size_t> chosen(vf);
    auto rec = [&](auto && self, std::size_t a) -> BigInt {
        if (a == vf)
            return 1;
        BigInt total = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool fits = true;
            for (auto b : f.neighbours(static_cast<Vertex>(a)))
                if (static_cast<std::size_t>(b) < a && (sets[i] & ~common[chosen[b]]) != 0) {
                    fits = false;
                    break;
                }
            if (!fits)
                continue;
            chosen[a] = i;
            auto rest = self(self, a + 1);
            if (rest != 0)
                total += weight[i] * rest;
        }
        return total;
    };
    return rec(rec, 0);
}

BigInt hom_count(const Graph & f, const Graph & g)
{
    return hom_count(ColouredPattern::monochrome(f), ColouredPattern::monochrome(g));
}

BigRational hom_density(const Graph & f, const Graph & g)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("hom density into the empty graph");
    BigInt space = boost::multiprecision::pow(BigInt(g.vertex_count()), static_cast<unsigned>(f.vertex_count()));
    return BigRational{hom_count(f, g), space};
}

Graph blowup(const Graph & f, int k)
{
    if (k < 1)
        throw std::invalid_argument("blowup factor must be positive");
    std::vector<GraphEdge> edges;
    for (auto [a, b] : f.edges())
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                edges.emplace_back(a * k + i, b * k + j);
    return Graph{f.vertex_count() * k, std::move(edges)};
}

ColouredPattern blowup(const ColouredPattern & f, int k)
{
    if (k < 1)
        throw std::invalid_argument("blowup factor must be positive");
    std::vector<ColouredEdge> edges;
    for (const auto & e : f.edges())
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                edges.push_back({e.u * k + i, e.v * k + j, e.colour});
    return ColouredPattern{f.vertex_count() * k, std::move(edges)};
}

} // namespace ramsey
