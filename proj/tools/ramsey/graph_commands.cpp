#include "common.hpp"

#include <ramsey/collapsible.hpp>
#include <ramsey/colouring.hpp>
#include <ramsey/density.hpp>
#include <ramsey/rainbow.hpp>

#include <map>
#include <memory>

namespace cli {

namespace {

Json edge_json(const ramsey::Graph & g, std::size_t index)
{
    auto [u, v] = g.edge(index);
    return {u, v};
}

Json collapse_json(const ramsey::Graph & g, const ramsey::CollapseReport & report)
{
    if (report.verdict == ramsey::Verdict::no) {
        auto [e, a] = *report.failure;
        Json failure{{"e", edge_json(g, e)}};
        if (a >= 0)
            failure["a"] = a;
        return {{"failure", failure}};
    }
    Json list = Json::array();
    for (const auto & w : report.witnesses) {
        Json item{{"e", edge_json(g, w.e)}};
        if (w.a >= 0)
            item["a"] = w.a;
        item["f"] = edge_json(g, w.f);
        item["target"] = w.target;
        item["map"] = w.map;
        list.push_back(std::move(item));
    }
    return {{"witnesses", list}};
}

Json star_json(const ramsey::Graph & g, const ramsey::StarSpec & star)
{
    Json removed = Json::array();
    for (auto e : star.removed)
        removed.push_back(edge_json(g, e));
    Json flipped = Json::array();
    for (bool f : star.flipped)
        flipped.push_back(f);
    return {{"removed", removed}, {"flipped", flipped}};
}

Json rsc_json(const ramsey::Graph & g, const ramsey::RscReport & report)
{
    Json stars = Json::array();
    for (const auto & s : report.stars) {
        Json item = star_json(g, s.star);
        item["admits"] = s.admits;
        if (s.admits)
            item["map"] = s.map;
        stars.push_back(std::move(item));
    }
    return {{"star_types", report.star_types}, {"stars", stars}};
}

struct AnalyzeOptions {
    std::string graph, file;
    std::vector<int> rsc{2};
};

Outcome analyze(const GlobalOptions & global, const AnalyzeOptions & opt)
{
    auto g = load_graph(opt.graph, opt.file);
    auto limits = global.limits();
    Outcome out;
    auto & doc = out.doc;
    doc["property"] = "analyze-graph";
    doc["instance"] = describe_graph(opt.graph, opt.file);

    auto m2 = ramsey::two_density(g);
    doc["m2"] = ramsey::to_string(m2.value);
    auto balance = ramsey::strictly_2_balanced(g);
    doc["strictly_2_balanced"] = balance.strictly_2_balanced;
    doc["nearly_bipartite"] = ramsey::is_nearly_bipartite(g);

    auto col = ramsey::collapsible(g, limits);
    auto semi = ramsey::semi_collapsible(g, limits);
    doc["collapsible"] = verdict_json(col.verdict);
    doc["semi_collapsible"] = verdict_json(semi.verdict);
    std::uint64_t nodes = col.nodes + semi.nodes;
    out.inconclusive = col.verdict == ramsey::Verdict::inconclusive || semi.verdict == ramsey::Verdict::inconclusive;

    Json rsc = Json::object(), rsc_witness = Json::object();
    for (int r : opt.rsc) {
        if (r < 2)
            throw UsageError("--rsc values must be at least 2");
        ramsey::RscOptions ro;
        ro.limits = limits;
        auto report = ramsey::rainbow_sc_property(g, r, ro);
        rsc[std::to_string(r)] = verdict_json(report.verdict);
        rsc_witness[std::to_string(r)] = rsc_json(g, report);
        nodes += report.nodes;
        out.inconclusive = out.inconclusive || report.verdict == ramsey::Verdict::inconclusive;
    }
    doc["rsc"] = rsc;

    Json witness;
    witness["m2"] = m2.vertices;
    witness["balance_violator"] = balance.violator
        ? Json{{"m2", ramsey::to_string(balance.violator->value)}, {"vertices", balance.violator->vertices}}
        : Json(nullptr);
    witness["collapsible"] = collapse_json(g, col);
    witness["semi_collapsible"] = collapse_json(g, semi);
    witness["rsc"] = rsc_witness;
    doc["witness"] = witness;
    doc["nodes_expanded"] = nodes;
    return out;
}

struct ArrowOptions {
    std::string g, g_file, h, h_file;
    int r = 2;
};

Outcome arrow(const GlobalOptions & global, const ArrowOptions & opt)
{
    auto g = load_graph(opt.g, opt.g_file);
    auto h = load_graph(opt.h, opt.h_file);
    auto result = ramsey::arrow_check(g, h, opt.r, global.limits());
    Outcome out;
    auto & doc = out.doc;
    doc["property"] = "arrow";
    doc["instance"] = {{"g", describe_graph(opt.g, opt.g_file)}, {"h", describe_graph(opt.h, opt.h_file)}, {"r", opt.r}};
    doc["verdict"] = verdict_json(result.verdict);
    if (result.verdict == ramsey::Verdict::no) {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        doc["witness"] = {{"edges", edges}, {"colours", result.colouring},
            {"verified", ramsey::is_h_free_colouring(g, h, result.colouring)}};
    }
    else
        doc["witness"] = nullptr;
    doc["nodes_expanded"] = result.nodes;
    out.inconclusive = result.verdict == ramsey::Verdict::inconclusive;
    return out;
}

} // namespace

void add_graph_commands(CLI::App & app, Registry & registry, const GlobalOptions & global)
{
    {
        auto opt = std::make_shared<AnalyzeOptions>();
        auto * sub = app.add_subcommand("analyze-graph", "2-density, balance, collapsibility and the rainbow star-constellation property");
        sub->add_option("--graph", opt->graph, "Atlas spec, e.g. petersen or cycle:5");
        sub->add_option("--graph-file", opt->file, "Graph file (header 'n m')");
        sub->add_option("--rsc", opt->rsc, "Colour counts r for the rainbow property")->delimiter(',');
        registry.add(sub, [&global, opt] { return analyze(global, *opt); });
    }
    {
        auto opt = std::make_shared<ArrowOptions>();
        auto * sub = app.add_subcommand("arrow", "Does every r-colouring of E(G) contain a monochromatic H");
        sub->add_option("--g", opt->g, "Host graph spec");
        sub->add_option("--g-file", opt->g_file, "Host graph file");
        sub->add_option("--h", opt->h, "Pattern graph spec");
        sub->add_option("--h-file", opt->h_file, "Pattern graph file");
        sub->add_option("--r", opt->r, "Number of colours")->check(CLI::Range(1, 31));
        registry.add(sub, [&global, opt] { return arrow(global, *opt); });
    }
}

} // namespace cli
