#include <ramsey/clots.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

template <typename Visit>
void for_each_subset(const std::vector<Vertex> & items, std::size_t k, Visit && visit)
{
    std::vector<Vertex> pick;
    auto rec = [&](auto && self, std::size_t from) -> void {
        if (pick.size() == k) {
            visit(pick);
            return;
        }
        for (std::size_t i = from; i + (k - pick.size()) <= items.size(); ++i) {
            pick.push_back(items[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<Clot> find_clots(const UniformHypergraph & h, std::span<const Vertex> w)
{
    const int s = h.uniformity();
    if (s < 3)
        throw std::invalid_argument("clots need s >= 3");
    auto sub = induced(h, w);
    const auto & g = sub.hypergraph;
    const auto n = g.vertex_count();
    const auto nucleus_size = static_cast<std::size_t>(2 * s - 3);

    // Any two nucleus vertices lie in a common (s-1)-subset, hence in a common edge.
    std::vector<std::vector<bool>> together(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (auto a : g.edge(e))
            for (auto b : g.edge(e))
                together[a][b] = true;

    // Completions of a sorted (s-1)-set: vertices v with set ∪ {v} an edge.
    auto completions = [&](const std::vector<Vertex> & part) {
        std::vector<Vertex> out;
        for (auto e : g.incident(part[0])) {
            auto edge = g.edge(e);
            if (!std::includes(edge.begin(), edge.end(), part.begin(), part.end()))
                continue;
            for (auto v : edge)
                if (!std::binary_search(part.begin(), part.end(), v))
                    out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<Clot> clots;
    std::vector<Vertex> nucleus;
    auto outside = [&](const std::vector<Vertex> & c) {
        std::vector<Vertex> out;
        for (auto v : c)
            if (!std::binary_search(nucleus.begin(), nucleus.end(), v))
                out.push_back(v);
        return out;
    };

    auto rec = [&](auto && self, Vertex from) -> void {
        if (nucleus.size() == nucleus_size) {
            Clot clot;
            bool ok = true;
            for_each_subset(nucleus, static_cast<std::size_t>(s - 1), [&](const std::vector<Vertex> & part) {
                if (!ok)
                    return;
                auto out = outside(completions(part));
                if (out.size() < 2) {
                    ok = false;
                    return;
                }
                clot.completions.push_back({part, out[0], out[1], out.size()});
            });
            if (!ok)
                return;
            clot.nucleus = nucleus;
            clot.support = nucleus;
            for (const auto & c : clot.completions) {
                clot.support.push_back(c.first);
                clot.support.push_back(c.second);
            }
            std::sort(clot.support.begin(), clot.support.end());
            clot.support.erase(std::unique(clot.support.begin(), clot.support.end()), clot.support.end());
            // Back to original labels.
            for (auto & v : clot.nucleus)
                v = sub.original[v];
            for (auto & v : clot.support)
                v = sub.original[v];
            for (auto & c : clot.completions) {
                for (auto & v : c.subset)
                    v = sub.original[v];
                c.first = sub.original[c.first];
                c.second = sub.original[c.second];
            }
            clots.push_back(std::move(clot));
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            bool fits = std::all_of(nucleus.begin(), nucleus.end(), [&](Vertex a) { return together[a][v]; });
            if (!fits)
                continue;
            nucleus.push_back(v);
            self(self, v + 1);
            nucleus.pop_back();
        }
    };
    rec(rec, 0);
    return clots;
}

std::string_view to_string(ObstructionStatus status) noexcept
{
    switch (status) {
    case ObstructionStatus::holds: return "holds";
    case ObstructionStatus::violated: return "violated";
    case ObstructionStatus::not_applicable: return "not_applicable";
    case ObstructionStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ObstructionReport check_obstruction(const UniformHypergraph & h, std::span<const Vertex> s, int universe,
    const ChoosabilityOptions & base)
{
    if (h.uniformity() < 3)
        throw std::invalid_argument("the obstruction lemma needs s >= 3");
    std::vector<Vertex> set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    ObstructionReport report;
    auto options = base;
    options.universe = universe;
    auto whole = is_2_choosable(induced(h, set).hypergraph, options).verdict;
    if (whole == Verdict::inconclusive)
        return report;
    report.non_choosable = whole == Verdict::no;
    if (!report.non_choosable) {
        report.status = ObstructionStatus::not_applicable;
        return report;
    }
    report.minimal = true;
    for (std::size_t i = 0; i < set.size() && report.minimal; ++i) {
        auto smaller = set;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        auto v = is_2_choosable(induced(h, smaller).hypergraph, options).verdict;
        if (v == Verdict::inconclusive)
            return report;
        report.minimal = v == Verdict::yes;
    }
    if (!report.minimal) {
        report.status = ObstructionStatus::not_applicable;
        return report;
    }

    // Minimal non-choosable sets are connected, so the procedure applies.
    auto trace = reveal_layers(h, set);
    const int su = h.uniformity();
    report.degenerate = count_degenerate(trace);
    report.depth = trace.depth();
    if (report.degenerate >= su - 1)
        report.layer_bound_ok = trace.depth() * (su - 1) <= static_cast<int>(set.size()) - 1;
    auto clots = find_clots(h, set);
    if (!clots.empty())
        report.clot = std::move(clots.front());
    report.trace = std::move(trace);
    report.status = report.degenerate >= su - 1 || report.clot ? ObstructionStatus::holds : ObstructionStatus::violated;
    return report;
}

} // namespace ramsey
