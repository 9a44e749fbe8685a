#include <ramsey/collapsible.hpp>

#include <ramsey/homomorphism.hpp>

#include <stdexcept>

namespace ramsey {

namespace {

std::optional<CollapseWitness> try_collapse(const Graph & h, const std::vector<ColouredPattern> & minus, std::size_t e,
    Vertex target, Budget & budget)
{
    HomTarget into{minus[e]};
    for (std::size_t f = 0; f < h.edge_count(); ++f) {
        auto [x, y] = h.edge(f);
        if (auto map = find_homomorphism(minus[f], into, {{x, target}, {y, target}}, &budget))
            return CollapseWitness{e, -1, f, target, std::move(*map)};
    }
    return std::nullopt;
}

std::vector<ColouredPattern> edge_deleted(const Graph & h)
{
    if (h.edge_count() == 0)
        throw std::invalid_argument("collapsibility needs at least one edge");
    std::vector<ColouredPattern> out;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        out.push_back(ColouredPattern::monochrome(h.without_edge(i)));
    return out;
}

} // namespace

CollapseReport collapsible(const Graph & h, SearchLimits limits)
{
    auto minus = edge_deleted(h);
    CollapseReport report;
    Budget budget(limits);
    try {
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            for (auto a : {h.edge(e).first, h.edge(e).second}) {
                auto w = try_collapse(h, minus, e, a, budget);
                if (!w) {
                    report.verdict = Verdict::no;
                    report.failure = {e, a};
                    report.nodes = budget.nodes();
                    return report;
                }
                w->a = a;
                report.witnesses.push_back(std::move(*w));
            }
        report.verdict = Verdict::yes;
    }
    catch (const BudgetExceeded &) {
        report.verdict = Verdict::inconclusive;
    }
    report.nodes = budget.nodes();
    return report;
}

bool is_collapsible(const Graph & h)
{
    return collapsible(h).verdict == Verdict::yes;
}

CollapseReport semi_collapsible(const Graph & h, SearchLimits limits)
{
    auto minus = edge_deleted(h);
    CollapseReport report;
    Budget budget(limits);
    try {
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            std::optional<CollapseWitness> w;
            for (Vertex t = 0; t < h.vertex_count() && !w; ++t)
                w = try_collapse(h, minus, e, t, budget);
            if (!w) {
                report.verdict = Verdict::no;
                report.failure = {e, -1};
                report.nodes = budget.nodes();
                return report;
            }
            report.witnesses.push_back(std::move(*w));
        }
        report.verdict = Verdict::yes;
    }
    catch (const BudgetExceeded &) {
        report.verdict = Verdict::inconclusive;
    }
    report.nodes = budget.nodes();
    return report;
}

bool is_semi_collapsible(const Graph & h)
{
    return semi_collapsible(h).verdict == Verdict::yes;
}

bool verify_collapse(const Graph & h, const CollapseWitness & w)
{
    if (w.e >= h.edge_count() || w.f >= h.edge_count())
        return false;
    if (w.a >= 0 && w.a != h.edge(w.e).first && w.a != h.edge(w.e).second)
        return false;
    if (w.a >= 0 && w.target != w.a)
        return false;
    auto [x, y] = h.edge(w.f);
    if (w.map.size() != static_cast<std::size_t>(h.vertex_count()) || w.map[x] != w.target || w.map[y] != w.target)
        return false;
    return is_homomorphism(ColouredPattern::monochrome(h.without_edge(w.f)),
        ColouredPattern::monochrome(h.without_edge(w.e)), w.map);
}

} // namespace ramsey
