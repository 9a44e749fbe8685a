#include <ramsey/reveal.hpp>

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ramsey {

std::string_view to_string(StepKind kind) noexcept
{
    switch (kind) {
    case StepKind::seed: return "seed";
    case StepKind::degenerate: return "degenerate";
    case StepKind::new_layer: return "new_layer";
    }
    return "seed";
}

RevealTrace reveal_layers(const UniformHypergraph & h, std::span<const Vertex> s)
{
    std::vector<Vertex> vertices(s.begin(), s.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.empty())
        throw std::invalid_argument("reveal: empty vertex set");
    if (!is_connected_within(h, vertices))
        throw std::invalid_argument("reveal: H[S] is not connected");

    auto sub = induced(h, vertices);
    const auto & g = sub.hypergraph; // edges stay in lexicographic order under the monotone relabelling
    const int su = h.uniformity();
    const auto n = static_cast<std::size_t>(g.vertex_count());

    RevealTrace trace;
    trace.s = su;
    trace.vertices = vertices;
    trace.arrival.assign(n, -1);
    trace.degenerate.assign(n, false);

    std::vector<bool> inside(n, false);
    std::size_t revealed = 0;
    auto original_edge = [&](std::size_t e) {
        std::vector<Vertex> out;
        for (auto v : g.edge(e))
            out.push_back(sub.original[v]);
        return out;
    };
    auto absorb = [&](std::size_t e, StepKind kind, int layer) {
        RevealStep step{kind, original_edge(e), {}, layer};
        for (auto v : g.edge(e))
            if (!inside[v]) {
                inside[v] = true;
                ++revealed;
                trace.arrival[v] = static_cast<int>(trace.steps.size());
                trace.degenerate[v] = kind == StepKind::degenerate;
                step.new_vertices.push_back(sub.original[v]);
            }
        trace.steps.push_back(std::move(step));
    };
    auto meet = [&](std::size_t e) {
        int k = 0;
        for (auto v : g.edge(e))
            k += inside[v];
        return k;
    };
    auto snapshot = [&] {
        std::vector<Vertex> layer;
        for (std::size_t v = 0; v < n; ++v)
            if (inside[v])
                layer.push_back(sub.original[v]);
        return layer;
    };

    inside[0] = true;
    revealed = 1;
    trace.arrival[0] = 0;
    trace.steps.push_back({StepKind::seed, {}, {vertices[0]}, 1});

    for (int layer = 1;; ++layer) {
        for (bool absorbed = true; absorbed;) {
            absorbed = false;
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                auto k = meet(e);
                if (k >= 2 && k <= su - 1) {
                    absorb(e, StepKind::degenerate, layer);
                    absorbed = true;
                    break;
                }
            }
        }
        trace.layers.push_back(snapshot());
        if (revealed == n)
            break;

        // Smallest vertex of the layer with an edge meeting the layer only there; smallest such edge.
        std::size_t chosen = g.edge_count();
        for (std::size_t v = 0; v < n && chosen == g.edge_count(); ++v) {
            if (!inside[v])
                continue;
            for (auto e : g.incident(static_cast<Vertex>(v)))
                if (meet(e) == 1) {
                    chosen = e;
                    break;
                }
        }
        if (chosen == g.edge_count())
            throw std::logic_error("reveal: no edge leaves a layer of a connected set");
        absorb(chosen, StepKind::new_layer, layer + 1);
    }
    return trace;
}

int count_degenerate(const RevealTrace & trace)
{
    return static_cast<int>(std::count(trace.degenerate.begin(), trace.degenerate.end(), true));
}

int count_degenerate_steps(const RevealTrace & trace)
{
    return static_cast<int>(std::count_if(trace.steps.begin(), trace.steps.end(),
        [](const RevealStep & step) { return step.kind == StepKind::degenerate; }));
}

int expected_degenerate(const RevealTrace & trace)
{
    return static_cast<int>(trace.vertices.size()) - 1 - (trace.depth() - 1) * (trace.s - 1);
}

std::vector<Vertex> halted_prefix(const RevealTrace & trace, int k)
{
    std::vector<Vertex> prefix;
    int seen = 0;
    for (const auto & step : trace.steps) {
        prefix.insert(prefix.end(), step.new_vertices.begin(), step.new_vertices.end());
        if (step.kind == StepKind::degenerate)
            seen += static_cast<int>(step.new_vertices.size());
        if (seen >= k && k > 0) {
            std::sort(prefix.begin(), prefix.end());
            return prefix;
        }
    }
    return {};
}

void write_trace_jsonl(std::ostream & out, const RevealTrace & trace)
{
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto & step = trace.steps[i];
        nlohmann::ordered_json line;
        line["step"] = i;
        line["kind"] = to_string(step.kind);
        line["edge"] = step.edge;
        line["new_vertices"] = step.new_vertices;
        line["layer"] = step.layer;
        out << line.dump() << '\n';
    }
}

} // namespace ramsey
