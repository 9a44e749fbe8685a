#include <ramsey/choosability.hpp>

#include <ramsey/families.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace ramsey {

namespace {

void check_universe(int universe)
{
    if (universe < 2 || universe > max_colours)
        throw std::invalid_argument("list universe must lie in [2, " + std::to_string(max_colours) + "]");
}

// Vertices left after repeatedly deleting vertices that lie in at most one edge
// (together with that edge).
std::vector<Vertex> peel_low_degree(const UniformHypergraph & h)
{
    const auto n = static_cast<std::size_t>(h.vertex_count());
    std::vector<std::size_t> degree(n);
    std::vector<bool> vertex_alive(n, true), edge_alive(h.edge_count(), true);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        degree[v] = h.degree(v);
        if (degree[v] <= 1)
            queue.push_back(v);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (!vertex_alive[v])
            continue;
        vertex_alive[v] = false;
        for (auto e : h.incident(v)) {
            if (!edge_alive[e])
                continue;
            edge_alive[e] = false;
            for (auto w : h.edge(e))
                if (w != v && vertex_alive[w] && --degree[w] == 1)
                    queue.push_back(w);
        }
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (vertex_alive[v])
            rest.push_back(v);
    return rest;
}

// Small ring of recent successful colourings; consecutive assignments in the
// enumeration differ only near the end, so old colourings often still fit.
class ColouringCache {
public:
    bool covers(const UniformHypergraph & h, const std::vector<std::uint32_t> & masks) const
    {
        for (const auto & col : entries_) {
            bool fits = true;
            for (std::size_t v = 0; v < masks.size() && fits; ++v)
                fits = (masks[v] >> col[v]) & 1;
            if (fits && is_proper(h, col))
                return true;
        }
        return false;
    }

    void add(std::vector<int> col)
    {
        if (entries_.size() < capacity)
            entries_.push_back(std::move(col));
        else
            entries_[next_++ % capacity] = std::move(col);
    }

private:
    static constexpr std::size_t capacity = 8;
    std::vector<std::vector<int>> entries_;
    std::size_t next_ = 0;
};

// Returns a bad assignment for a connected component, or nullopt if none exists.
std::optional<ListAssignment> component_counterexample(const UniformHypergraph & comp, int universe, Budget & budget,
    std::uint64_t & assignments)
{
    // Identical lists first: cheapest possible failure.
    ListColourer colourer(comp, universe);
    auto identical = ListAssignment::identical(comp.vertex_count());
    if (!colourer.solve(identical.masks(), budget))
        return identical;

    ColouringCache cache;
    std::optional<ListAssignment> bad;
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(comp.vertex_count()));
    for_each_canonical_assignment(comp.vertex_count(), universe, [&](const std::vector<std::array<int, 2>> & lists) {
        ++assignments;
        for (std::size_t v = 0; v < lists.size(); ++v)
            masks[v] = (std::uint32_t{1} << lists[v][0]) | (std::uint32_t{1} << lists[v][1]);
        if (cache.covers(comp, masks))
            return true;
        auto col = colourer.solve(masks, budget);
        if (!col) {
            bad = ListAssignment{lists};
            return false;
        }
        cache.add(std::move(*col));
        return true;
    });
    return bad;
}

} // namespace

std::uint64_t canonical_assignment_count(Vertex n, int universe)
{
    check_universe(universe);
    std::uint64_t count = 0;
    for_each_canonical_assignment(n, universe, [&](const auto &) {
        ++count;
        return true;
    });
    return count;
}

bool list_colourable(const UniformHypergraph & h, const ListAssignment & lists)
{
    if (lists.lists.size() != static_cast<std::size_t>(h.vertex_count()))
        throw std::invalid_argument("one list per vertex required");
    int top = 2;
    for (auto [a, b] : lists.lists)
        top = std::max({top, a, b});
    return proper_colouring(h, top, {}, lists.masks()).verdict == Verdict::yes;
}

ChoosabilityResult is_2_choosable(const UniformHypergraph & h, const ChoosabilityOptions & options)
{
    check_universe(options.universe);
    ChoosabilityResult result;
    Budget budget(options.limits);

    auto core_vertices = peel_low_degree(h);
    auto core = induced(h, core_vertices);
    bool unresolved = false;
    try {
        for (const auto & local : connected_components(core.hypergraph)) {
            if (local.size() < 2)
                continue;
            auto comp = induced(core.hypergraph, local);
            std::optional<ListAssignment> bad;
            if (static_cast<Vertex>(local.size()) > options.vertex_cap) {
                // Too big to enumerate, but identical lists may still fail.
                auto identical = ListAssignment::identical(comp.hypergraph.vertex_count());
                if (ListColourer(comp.hypergraph, options.universe).solve(identical.masks(), budget)) {
                    unresolved = true;
                    continue;
                }
                bad = std::move(identical);
            }
            else
                bad = component_counterexample(comp.hypergraph, options.universe, budget, result.assignments);
            if (!bad)
                continue;
            ListAssignment full = ListAssignment::identical(h.vertex_count());
            for (std::size_t i = 0; i < local.size(); ++i)
                full.lists[core.original[comp.original[i]]] = bad->lists[i];
            result.verdict = Verdict::no;
            result.bad = std::move(full);
            result.nodes = budget.nodes();
            return result;
        }
        result.verdict = unresolved ? Verdict::inconclusive : Verdict::yes;
    }
    catch (const BudgetExceeded &) {
        result.verdict = Verdict::inconclusive;
    }
    result.nodes = budget.nodes();
    return result;
}

std::vector<std::vector<Vertex>> connected_vertex_sets(const UniformHypergraph & h, int k)
{
    std::set<std::vector<Vertex>> seen;
    std::vector<std::vector<Vertex>> frontier;
    if (h.uniformity() > k)
        return {};
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::vector<Vertex> w(h.edge(i).begin(), h.edge(i).end());
        if (seen.insert(w).second)
            frontier.push_back(std::move(w));
    }
    std::vector<Vertex> grown;
    while (!frontier.empty()) {
        auto w = std::move(frontier.back());
        frontier.pop_back();
        for (auto v : w)
            for (auto e : h.incident(v)) {
                auto edge = h.edge(e);
                grown.clear();
                std::set_union(w.begin(), w.end(), edge.begin(), edge.end(), std::back_inserter(grown));
                if (grown.size() == w.size() || static_cast<int>(grown.size()) > k)
                    continue;
                if (seen.insert(grown).second)
                    frontier.push_back(grown);
            }
    }
    std::vector<std::vector<Vertex>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const auto & a, const auto & b) { return a.size() < b.size(); });
    return out;
}

NonChoosableReport find_non_choosable_subsets(const UniformHypergraph & h, int k, const ChoosabilityOptions & options)
{
    NonChoosableReport report;
    std::map<std::vector<Vertex>, Verdict> known;
    auto verdict_of = [&](const std::vector<Vertex> & w) {
        if (auto it = known.find(w); it != known.end())
            return it->second;
        auto v = is_2_choosable(induced(h, w).hypergraph, options).verdict;
        known.emplace(w, v);
        return v;
    };
    for (const auto & w : connected_vertex_sets(h, k)) {
        auto v = verdict_of(w);
        if (v == Verdict::inconclusive)
            report.verdict = Verdict::inconclusive;
        if (v != Verdict::no)
            continue;
        bool minimal = true;
        for (std::size_t i = 0; i < w.size() && minimal; ++i) {
            auto smaller = w;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            minimal = verdict_of(smaller) == Verdict::yes;
        }
        report.sets.push_back({w, minimal});
    }
    return report;
}

ChoosabilityResult is_2_choosable_wrt(const Graph & g, const Graph & h, const ChoosabilityOptions & options)
{
    if (h.edge_count() == 0)
        throw std::invalid_argument("choosability with respect to H needs H with an edge");
    if (h.edge_count() == 1) {
        ChoosabilityResult result;
        result.verdict = to_verdict(g.edge_count() == 0);
        if (g.edge_count() > 0)
            result.bad = ListAssignment::identical(static_cast<Vertex>(g.edge_count()));
        return result;
    }
    return is_2_choosable(copies_in(h, g), options);
}

namespace {

ChoosabilityResult forcing(const UniformHypergraph & family, const std::vector<Vertex> & y, const ChoosabilityOptions & options)
{
    std::vector<Vertex> members(y);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto sub = induced(family, members);
    auto inner = is_2_choosable(sub.hypergraph, options);
    ChoosabilityResult result = inner;
    if (inner.verdict != Verdict::inconclusive)
        result.verdict = inner.verdict == Verdict::yes ? Verdict::no : Verdict::yes;
    return result;
}

} // namespace

ChoosabilityResult list_schur(const std::vector<Vertex> & y, Vertex modulus, const ChoosabilityOptions & options)
{
    return forcing(build_schur_hypergraph(modulus), y, options);
}

ChoosabilityResult list_vdw(const std::vector<Vertex> & y, Vertex modulus, int k, const ChoosabilityOptions & options)
{
    return forcing(build_kap_hypergraph(k, modulus), y, options);
}

} // namespace ramsey
