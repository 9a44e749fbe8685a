#include <ramsey/density.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

std::vector<Vertex> mask_to_vertices(std::uint64_t mask)
{
    std::vector<Vertex> out;
    for (auto m = mask; m != 0; m &= m - 1)
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

void require_enumerable(const Graph & g, const char * what)
{
    if (g.vertex_count() > max_enumerable_vertices)
        throw std::invalid_argument(std::string(what) + ": more than " + std::to_string(max_enumerable_vertices)
            + " vertices");
}

// Dinic max flow on integer capacities.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1), level_(nodes), cursor_(nodes) {}

    void add_arc(int from, int to, std::int64_t capacity)
    {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t max_flow(int source, int sink)
    {
        std::int64_t total = 0;
        while (bfs(source, sink)) {
            cursor_ = head_;
            while (auto pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

    // Nodes reachable from the source in the residual graph after max_flow.
    std::vector<bool> source_side(int source)
    {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = arcs_[a].next)
                if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t capacity;
    };

    bool bfs(int source, int sink)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next)
                if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[sink] >= 0;
    }

    std::int64_t dfs(int u, int sink, std::int64_t limit)
    {
        if (u == sink)
            return limit;
        for (int & a = cursor_[u]; a != -1; a = arcs_[a].next) {
            auto & arc = arcs_[a];
            if (arc.capacity > 0 && level_[arc.to] == level_[u] + 1) {
                if (auto pushed = dfs(arc.to, sink, std::min(limit, arc.capacity))) {
                    arc.capacity -= pushed;
                    arcs_[a ^ 1].capacity += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

// Vertex set maximising q·e(S) - p·|S| as a maximum-weight closure: edge nodes
// (weight q) require both endpoints (weight -p).
std::vector<Vertex> best_closure(const Graph & g, std::int64_t p, std::int64_t q)
{
    const int m = static_cast<int>(g.edge_count());
    const int n = g.vertex_count();
    const int source = m + n, sink = m + n + 1;
    FlowNetwork net(m + n + 2);
    const auto infinite = q * static_cast<std::int64_t>(m + 1);
    for (int i = 0; i < m; ++i) {
        net.add_arc(source, i, q);
        net.add_arc(i, m + g.edge(i).first, infinite);
        net.add_arc(i, m + g.edge(i).second, infinite);
    }
    for (int v = 0; v < n; ++v)
        net.add_arc(m + v, sink, p);
    net.max_flow(source, sink);
    auto side = net.source_side(source);
    std::vector<Vertex> chosen;
    for (int v = 0; v < n; ++v)
        if (side[m + v])
            chosen.push_back(v);
    return chosen;
}

std::size_t induced_edge_count(const Graph & g, const std::vector<Vertex> & vertices)
{
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto v : vertices)
        in[v] = true;
    std::size_t count = 0;
    for (auto [u, v] : g.edges())
        count += in[u] && in[v];
    return count;
}

} // namespace

DensityWitness two_density(const Graph & h)
{
    require_enumerable(h, "two_density");
    DensityWitness best{Rational{1, 2}, {}};
    const auto n = h.vertex_count();
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask <= full && mask != 0; ++mask) {
        auto v = std::popcount(mask);
        if (v < 3)
            continue;
        auto e = static_cast<std::int64_t>(h.edges_within(mask));
        if (e == 0)
            continue;
        Rational value{e - 1, v - 2};
        if (value > best.value)
            best = {value, mask_to_vertices(mask)};
    }
    return best;
}

DensityWitness max_density_enumerate(const Graph & g)
{
    require_enumerable(g, "max_density");
    DensityWitness best{Rational{0}, {}};
    const auto n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Rational value{static_cast<std::int64_t>(g.edges_within(mask)), std::popcount(mask)};
        if (value > best.value)
            best = {value, mask_to_vertices(mask)};
    }
    return best;
}

DensityWitness max_density_flow(const Graph & g)
{
    if (g.edge_count() == 0)
        return {Rational{0}, {}};
    // Dinkelbach iteration: each round either certifies optimality or strictly raises the ratio.
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        all[v] = v;
    DensityWitness best{Rational{static_cast<std::int64_t>(g.edge_count()), g.vertex_count()}, all};
    while (true) {
        auto chosen = best_closure(g, best.value.numerator(), best.value.denominator());
        if (chosen.empty())
            return best;
        Rational value{static_cast<std::int64_t>(induced_edge_count(g, chosen)), static_cast<std::int64_t>(chosen.size())};
        if (value <= best.value)
            return best;
        best = {value, std::move(chosen)};
    }
}

DensityWitness max_density(const Graph & g)
{
    if (g.vertex_count() <= 20)
        return max_density_enumerate(g);
    return max_density_flow(g);
}

BalanceReport strictly_2_balanced(const Graph & h)
{
    require_enumerable(h, "strictly_2_balanced");
    BalanceReport report;
    const auto n = h.vertex_count();
    if (n < 3)
        return report;
    Rational own{static_cast<std::int64_t>(h.edge_count()) - 1, n - 2};
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        auto v = std::popcount(mask);
        if (v < 3)
            continue;
        auto e = static_cast<std::int64_t>(h.edges_within(mask));
        if (e == 0)
            continue;
        Rational value{e - 1, v - 2};
        if (value >= own && (!report.violator || value > report.violator->value)) {
            report.strictly_2_balanced = false;
            report.violator = DensityWitness{value, mask_to_vertices(mask)};
        }
    }
    return report;
}

bool is_strictly_2_balanced(const Graph & h)
{
    return strictly_2_balanced(h).strictly_2_balanced;
}

bool is_nearly_bipartite(const Graph & h)
{
    if (h.is_bipartite())
        return true;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (h.without_edge(i).is_bipartite())
            return true;
    return false;
}

std::optional<std::vector<Vertex>> helpful_lemma_violation(const Graph & h)
{
    require_enumerable(h, "helpful_lemma_check");
    const auto n = h.vertex_count();
    const auto m2 = two_density(h).value;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto w = std::popcount(mask);
        if (w > n - 3)
            continue;
        std::int64_t touching = 0;
        for (auto [u, v] : h.edges())
            touching += ((mask >> u) & 1) || ((mask >> v) & 1);
        if (!(m2 * w < Rational{touching}))
            return mask_to_vertices(mask);
    }
    return std::nullopt;
}

bool helpful_lemma_check(const Graph & h)
{
    return !helpful_lemma_violation(h).has_value();
}

} // namespace ramsey
