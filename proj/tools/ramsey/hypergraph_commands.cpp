#include "common.hpp"

#include <ramsey/choosability.hpp>
#include <ramsey/clots.hpp>
#include <ramsey/colouring.hpp>
#include <ramsey/degree_profile.hpp>
#include <ramsey/prestars.hpp>
#include <ramsey/reveal.hpp>
#include <ramsey/stars.hpp>
#include <ramsey/text_io.hpp>
#include <ramsey/threshold.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace cli {

namespace {

std::vector<Vertex> vertex_set_or_all(const std::string & text, const ramsey::UniformHypergraph & h)
{
    if (!text.empty())
        return parse_vertex_list(text);
    std::vector<Vertex> all(static_cast<std::size_t>(h.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

Json lists_json(const ramsey::ListAssignment & lists)
{
    Json out = Json::array();
    for (auto [a, b] : lists.lists)
        out.push_back({a, b});
    return out;
}

// ---- build, profile ------------------------------------------------------

Outcome build(const HypergraphSource & source)
{
    auto h = source.load();
    Outcome out;
    out.doc["instance"] = source.describe();
    out.doc["s"] = h.uniformity();
    out.doc["n"] = h.vertex_count();
    out.doc["m"] = h.edge_count();
    out.doc["edges"] = h.edge_list();
    std::ostringstream text;
    ramsey::write_hypergraph(text, h);
    out.text = text.str();
    Table table;
    for (int i = 0; i < h.uniformity(); ++i)
        table.header.push_back("v" + std::to_string(i + 1));
    for (const auto & e : h.edge_list()) {
        std::vector<std::string> row;
        for (auto v : e)
            row.push_back(std::to_string(v));
        table.rows.push_back(std::move(row));
    }
    out.table = std::move(table);
    return out;
}

struct ProfileOptions {
    HypergraphSource source;
    int trim_t = 0;
    std::uint64_t trim_m = 0;
};

Outcome profile(const ProfileOptions & opt)
{
    auto h = opt.source.load();
    Outcome out;
    out.doc["instance"] = opt.source.describe();
    if (opt.trim_t != 0) {
        if (opt.trim_t < 1 || opt.trim_t > h.uniformity())
            throw UsageError("--trim-t must lie in [1, s]");
        h = ramsey::trim_by_degree(h, opt.trim_t, opt.trim_m);
        out.doc["trimmed"] = {{"t", opt.trim_t}, {"m", opt.trim_m}};
    }
    auto p = ramsey::degree_profile(h);
    out.doc["s"] = p.s;
    out.doc["v"] = p.v;
    out.doc["e"] = p.e;
    out.doc["p_h"] = p.p_h;
    Json rows = Json::array();
    Table table{{"t", "max_degree", "average_degree", "occupied", "sum_squares", "ratio"}, {}};
    for (int t = 1; t <= p.s; ++t) {
        rows.push_back({{"t", t}, {"max_degree", p.max_degree[t]}, {"average_degree", p.average_degree[t]},
            {"occupied", p.occupied[t]}, {"sum_squares", p.sum_squares[t]}, {"ratio", p.ratio[t]}});
        table.rows.push_back({std::to_string(t), std::to_string(p.max_degree[t]), ramsey::format_double(p.average_degree[t]),
            std::to_string(p.occupied[t]), ramsey::format_double(p.sum_squares[t]), ramsey::format_double(p.ratio[t])});
    }
    out.doc["degrees"] = rows;
    out.table = std::move(table);
    return out;
}

// ---- colour, choosable, list-ramsey --------------------------------------

struct ColourOptions {
    HypergraphSource source;
    int r = 2;
    bool min_mono = false;
};

Outcome colour(const GlobalOptions & global, const ColourOptions & opt)
{
    auto h = opt.source.load();
    auto result = ramsey::proper_colouring(h, opt.r, global.limits());
    Outcome out;
    auto & doc = out.doc;
    doc["property"] = "colourable";
    doc["instance"] = opt.source.describe();
    doc["instance"]["r"] = opt.r;
    doc["verdict"] = verdict_json(result.verdict);
    doc["witness"] = result.verdict == ramsey::Verdict::yes ? Json(result.colouring) : Json(nullptr);
    if (opt.min_mono) {
        auto mono = ramsey::min_monochromatic_edges(h, opt.r, 28, global.limits());
        doc["min_monochromatic"] = {{"value", mono.value}, {"exact", mono.exact}, {"colouring", mono.colouring}};
    }
    doc["nodes_expanded"] = result.nodes;
    out.inconclusive = result.verdict == ramsey::Verdict::inconclusive;
    return out;
}

struct ChoosableOptions {
    HypergraphSource source;
    std::string g, h;
    int universe = 4;
    Vertex vertex_cap = 12;
    int subsets = 0;
};

Outcome choosable(const GlobalOptions & global, const ChoosableOptions & opt)
{
    ramsey::ChoosabilityOptions co{opt.universe, opt.vertex_cap, global.limits()};
    bool graph_pair = !opt.g.empty() || !opt.h.empty();
    bool has_source = !opt.source.family.empty() || !opt.source.input.empty();
    if (graph_pair == has_source)
        throw UsageError("give either --g and --h or a hypergraph source");
    Outcome out;
    auto & doc = out.doc;

    if (graph_pair) {
        if (opt.g.empty() || opt.h.empty())
            throw UsageError("--g and --h go together");
        if (opt.subsets != 0)
            throw UsageError("--subsets needs a hypergraph source");
        auto g = ramsey::graph_from_spec(opt.g);
        auto h = ramsey::graph_from_spec(opt.h);
        auto result = ramsey::is_2_choosable_wrt(g, h, co);
        doc["property"] = "2-choosable-wrt";
        doc["instance"] = {{"g", opt.g}, {"h", opt.h}, {"universe", opt.universe}};
        doc["verdict"] = verdict_json(result.verdict);
        if (result.bad) {
            Json edges = Json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            doc["witness"] = {{"edges", edges}, {"lists", lists_json(*result.bad)}};
        }
        else
            doc["witness"] = nullptr;
        doc["nodes_expanded"] = result.nodes;
        out.inconclusive = result.verdict == ramsey::Verdict::inconclusive;
        return out;
    }

    auto h = opt.source.load();
    doc["property"] = opt.subsets > 0 ? "non-choosable-subsets" : "2-choosable";
    doc["instance"] = opt.source.describe();
    doc["instance"]["universe"] = opt.universe;
    if (opt.subsets > 0) {
        auto report = ramsey::find_non_choosable_subsets(h, opt.subsets, co);
        doc["instance"]["max_size"] = opt.subsets;
        // Finding a set settles the question even if other checks ran out of budget.
        auto verdict = !report.sets.empty()                        ? ramsey::Verdict::yes
            : report.verdict == ramsey::Verdict::inconclusive ? ramsey::Verdict::inconclusive
                                                              : ramsey::Verdict::no;
        doc["verdict"] = verdict_json(verdict);
        Json sets = Json::array();
        for (const auto & s : report.sets)
            sets.push_back({{"vertices", s.vertices}, {"minimal", s.minimal}});
        doc["witness"] = sets;
        doc["nodes_expanded"] = 0;
        out.inconclusive = verdict == ramsey::Verdict::inconclusive;
        return out;
    }
    auto result = ramsey::is_2_choosable(h, co);
    doc["verdict"] = verdict_json(result.verdict);
    doc["witness"] = result.bad ? lists_json(*result.bad) : Json(nullptr);
    doc["assignments"] = result.assignments;
    doc["nodes_expanded"] = result.nodes;
    out.inconclusive = result.verdict == ramsey::Verdict::inconclusive;
    return out;
}

struct ListRamseyOptions {
    std::string kind = "schur";
    Vertex modulus = 0;
    std::string set;
    int k = 3;
    int universe = 4;
    Vertex vertex_cap = 12;
};

Outcome list_ramsey(const GlobalOptions & global, const ListRamseyOptions & opt)
{
    if (opt.modulus <= 0)
        throw UsageError("--modulus is required");
    auto y = parse_vertex_list(opt.set);
    if (y.empty())
        throw UsageError("--set is required");
    for (auto x : y)
        if (x < 0 || x >= opt.modulus)
            throw UsageError("--set elements must lie in [0, N)");
    ramsey::ChoosabilityOptions co{opt.universe, opt.vertex_cap, global.limits()};
    auto result = opt.kind == "schur" ? ramsey::list_schur(y, opt.modulus, co) : ramsey::list_vdw(y, opt.modulus, opt.k, co);
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    Outcome out;
    auto & doc = out.doc;
    doc["property"] = opt.kind == "schur" ? "list-schur" : "list-vdw";
    doc["instance"] = {{"modulus", opt.modulus}, {"set", y}, {"universe", opt.universe}};
    if (opt.kind == "vdw")
        doc["instance"]["k"] = opt.k;
    doc["verdict"] = verdict_json(result.verdict);
    if (result.verdict == ramsey::Verdict::yes && result.bad) {
        Json lists = Json::array();
        for (std::size_t i = 0; i < y.size(); ++i)
            lists.push_back({{"element", y[i]}, {"list", {result.bad->lists[i][0], result.bad->lists[i][1]}}});
        doc["witness"] = lists;
    }
    else
        doc["witness"] = nullptr;
    doc["nodes_expanded"] = result.nodes;
    out.inconclusive = result.verdict == ramsey::Verdict::inconclusive;
    return out;
}

// ---- reveal, clots, obstruction ------------------------------------------

Json step_json(const ramsey::RevealStep & step, std::size_t index)
{
    return {{"step", index}, {"kind", ramsey::to_string(step.kind)}, {"edge", step.edge},
        {"new_vertices", step.new_vertices}, {"layer", step.layer}};
}

Json trace_json(const ramsey::RevealTrace & trace)
{
    Json steps = Json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        steps.push_back(step_json(trace.steps[i], i));
    std::vector<Vertex> degenerate;
    for (std::size_t i = 0; i < trace.vertices.size(); ++i)
        if (trace.degenerate[i])
            degenerate.push_back(trace.vertices[i]);
    return {{"depth", trace.depth()}, {"layers", trace.layers}, {"degenerate", degenerate}, {"steps", steps}};
}

Json clot_json(const ramsey::Clot & clot)
{
    Json completions = Json::array();
    for (const auto & c : clot.completions)
        completions.push_back({{"subset", c.subset}, {"first", c.first}, {"second", c.second}, {"total", c.total}});
    return {{"nucleus", clot.nucleus}, {"completions", completions}, {"support", clot.support}};
}

struct SetOptions {
    HypergraphSource source;
    std::string set;
    std::string trace_file;
    int universe = 4;
    Vertex vertex_cap = 12;
    int sweep = 0;
};

Outcome reveal(const SetOptions & opt)
{
    auto h = opt.source.load();
    auto s = vertex_set_or_all(opt.set, h);
    auto trace = ramsey::reveal_layers(h, s);
    Outcome out;
    out.doc["instance"] = opt.source.describe();
    out.doc["set"] = trace.vertices;
    out.doc["s"] = trace.s;
    auto body = trace_json(trace);
    out.doc["depth"] = body["depth"];
    out.doc["degenerate_count"] = ramsey::count_degenerate(trace);
    out.doc["expected_degenerate"] = ramsey::expected_degenerate(trace);
    out.doc["layers"] = body["layers"];
    out.doc["degenerate"] = body["degenerate"];
    out.doc["steps"] = body["steps"];

    std::ostringstream lines;
    ramsey::write_trace_jsonl(lines, trace);
    out.text = lines.str();
    if (!opt.trace_file.empty()) {
        std::ofstream file(opt.trace_file);
        if (!file)
            throw UsageError("cannot write " + opt.trace_file);
        file << lines.str();
    }
    Table table{{"step", "kind", "edge", "new_vertices", "layer"}, {}};
    for (const auto & step : out.doc["steps"])
        table.rows.push_back({step["step"].dump(), step["kind"].get<std::string>(), step["edge"].dump(),
            step["new_vertices"].dump(), step["layer"].dump()});
    out.table = std::move(table);
    return out;
}

Outcome clots(const SetOptions & opt)
{
    auto h = opt.source.load();
    auto w = vertex_set_or_all(opt.set, h);
    auto found = ramsey::find_clots(h, w);
    Outcome out;
    out.doc["instance"] = opt.source.describe();
    out.doc["set"] = w;
    out.doc["count"] = found.size();
    Json list = Json::array();
    Table table{{"nucleus", "support"}, {}};
    for (const auto & c : found) {
        list.push_back(clot_json(c));
        table.rows.push_back({Json(c.nucleus).dump(), Json(c.support).dump()});
    }
    out.doc["clots"] = list;
    out.table = std::move(table);
    return out;
}

Json obstruction_json(const ramsey::ObstructionReport & r)
{
    Json j{{"status", ramsey::to_string(r.status)}, {"non_choosable", r.non_choosable}, {"minimal", r.minimal},
        {"degenerate", r.degenerate}, {"depth", r.depth}, {"layer_bound_ok", r.layer_bound_ok}};
    j["clot"] = r.clot ? clot_json(*r.clot) : Json(nullptr);
    j["trace"] = r.trace ? trace_json(*r.trace) : Json(nullptr);
    return j;
}

Outcome obstruction(const GlobalOptions & global, const SetOptions & opt)
{
    auto h = opt.source.load();
    ramsey::ChoosabilityOptions co{opt.universe, opt.vertex_cap, global.limits()};
    Outcome out;
    auto & doc = out.doc;
    doc["property"] = "obstruction";
    doc["instance"] = opt.source.describe();
    doc["instance"]["universe"] = opt.universe;

    if (opt.sweep > 0) {
        if (!opt.set.empty())
            throw UsageError("--sweep and --set are exclusive");
        std::size_t counts[4] = {0, 0, 0, 0};
        Json violations = Json::array();
        for (const auto & s : ramsey::connected_vertex_sets(h, opt.sweep)) {
            auto report = ramsey::check_obstruction(h, s, opt.universe, co);
            ++counts[static_cast<int>(report.status)];
            if (report.status == ramsey::ObstructionStatus::violated)
                violations.push_back(s);
        }
        doc["instance"]["max_size"] = opt.sweep;
        doc["verdict"] = verdict_json(counts[3] > 0 && violations.empty() ? ramsey::Verdict::inconclusive
                                                                          : ramsey::to_verdict(violations.empty()));
        doc["witness"] = violations;
        doc["holds"] = counts[0];
        doc["violated"] = counts[1];
        doc["not_applicable"] = counts[2];
        doc["inconclusive"] = counts[3];
        doc["nodes_expanded"] = 0;
        out.inconclusive = counts[3] > 0 && violations.empty();
        return out;
    }

    auto s = vertex_set_or_all(opt.set, h);
    auto report = ramsey::check_obstruction(h, s, opt.universe, co);
    doc["set"] = s;
    switch (report.status) {
    case ramsey::ObstructionStatus::holds: doc["verdict"] = true; break;
    case ramsey::ObstructionStatus::violated: doc["verdict"] = false; break;
    case ramsey::ObstructionStatus::not_applicable: doc["verdict"] = "not-applicable"; break;
    case ramsey::ObstructionStatus::inconclusive: doc["verdict"] = "inconclusive"; break;
    }
    doc["witness"] = obstruction_json(report);
    doc["nodes_expanded"] = 0;
    out.inconclusive = report.status == ramsey::ObstructionStatus::inconclusive;
    return out;
}

// ---- count -----------------------------------------------------------------

struct CountOptions {
    HypergraphSource source;
    std::string what = "stars";
    int r = 2;
    std::string colouring;
    Vertex modulus = 0;
    std::string sets;
};

Json rainbow_json(const ramsey::RainbowCount & c)
{
    return {{"any", c.any}, {"per_colour", c.per_colour}};
}

Outcome count(const CountOptions & opt)
{
    Outcome out;
    auto & doc = out.doc;
    doc["count"] = opt.what;
    if (opt.what == "prestars" || opt.what == "preconstellations") {
        if (!opt.source.family.empty() || !opt.source.input.empty())
            throw UsageError(opt.what + " takes --modulus and --sets, not a hypergraph");
        if (opt.modulus <= 0 || opt.sets.empty())
            throw UsageError(opt.what + " needs --modulus and --sets");
        auto y = parse_set_list(opt.sets);
        for (const auto & yi : y)
            for (auto x : yi)
                if (x < 0 || x >= opt.modulus)
                    throw UsageError("--sets elements must lie in [0, N)");
        doc["instance"] = {{"modulus", opt.modulus}, {"sets", y}};
        auto prestars = ramsey::count_prestars(y, opt.modulus);
        doc["prestars"] = prestars.str();
        if (opt.what == "preconstellations") {
            auto pre = ramsey::count_preconstellations(y, opt.modulus);
            doc["preconstellations"] = pre.str();
            doc["bound_holds"] = ramsey::preconstellation_bound_holds(pre, prestars, static_cast<int>(y.size()), opt.modulus);
        }
        return out;
    }
    auto h = opt.source.load();
    doc["instance"] = opt.source.describe();
    doc["instance"]["r"] = opt.r;
    if (opt.what == "stars")
        doc["stars"] = ramsey::count_stars(h, opt.r);
    else if (opt.what == "constellations") {
        doc["stars"] = ramsey::count_stars(h, opt.r);
        doc["constellations"] = ramsey::count_constellations(h, opt.r);
    }
    else {
        auto psi = parse_vertex_list(opt.colouring);
        if (psi.size() != static_cast<std::size_t>(h.vertex_count()))
            throw UsageError("--colouring needs one colour per vertex (0 = uncoloured)");
        ramsey::PartialColouring colours(psi.begin(), psi.end());
        auto report = ramsey::count_rainbow(h, opt.r, colours);
        doc["rainbow_stars"] = rainbow_json(report.stars);
        doc["rainbow_constellations"] = rainbow_json(report.constellations);
    }
    return out;
}

} // namespace

void add_hypergraph_commands(CLI::App & app, Registry & registry, const GlobalOptions & global)
{
    {
        auto opt = std::make_shared<HypergraphSource>();
        auto * sub = app.add_subcommand("build", "Build a family hypergraph or read one from a file");
        add_hypergraph_source(*sub, *opt);
        registry.add(sub, [opt] { return build(*opt); });
    }
    {
        auto opt = std::make_shared<ProfileOptions>();
        auto * sub = app.add_subcommand("profile", "t-degree profile and p_H");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--trim-t", opt->trim_t, "Trim by t-degree before profiling");
        sub->add_option("--trim-m", opt->trim_m, "Number of edges to trim");
        registry.add(sub, [opt] { return profile(*opt); });
    }
    {
        auto opt = std::make_shared<ColourOptions>();
        auto * sub = app.add_subcommand("colour", "Proper r-colouring of a hypergraph");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--r", opt->r, "Number of colours")->check(CLI::Range(1, 31));
        sub->add_flag("--min-mono", opt->min_mono, "Also minimise monochromatic edges");
        registry.add(sub, [&global, opt] { return colour(global, *opt); });
    }
    {
        auto opt = std::make_shared<ChoosableOptions>();
        auto * sub = app.add_subcommand("choosable", "2-choosability of a hypergraph, or of G with respect to H");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--g", opt->g, "Host graph spec (with --h)");
        sub->add_option("--h", opt->h, "Pattern graph spec (with --g)");
        sub->add_option("--universe", opt->universe, "Palette size for the lists")->check(CLI::Range(2, 31));
        sub->add_option("--vertex-cap", opt->vertex_cap, "Largest component decided exhaustively");
        sub->add_option("--subsets", opt->subsets, "List connected non-choosable sets of at most this size");
        registry.add(sub, [&global, opt] { return choosable(global, *opt); });
    }
    {
        auto opt = std::make_shared<ListRamseyOptions>();
        auto * sub = app.add_subcommand("list-ramsey", "Does some 2-list assignment on Y force a monochromatic Schur triple or k-AP");
        sub->add_option("--kind", opt->kind, "schur or vdw")->check(CLI::IsMember({"schur", "vdw"}));
        sub->add_option("--modulus", opt->modulus, "N");
        sub->add_option("--set", opt->set, "Y as a comma list of residues");
        sub->add_option("--k", opt->k, "Progression length for vdw");
        sub->add_option("--universe", opt->universe, "Palette size for the lists")->check(CLI::Range(2, 31));
        sub->add_option("--vertex-cap", opt->vertex_cap, "Largest component decided exhaustively");
        registry.add(sub, [&global, opt] { return list_ramsey(global, *opt); });
    }
    {
        auto opt = std::make_shared<SetOptions>();
        auto * sub = app.add_subcommand("reveal", "Layer-by-layer reveal of a connected vertex set");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--set", opt->set, "Vertex set (default: all vertices)");
        sub->add_option("--trace", opt->trace_file, "Also write the JSON-lines trace here");
        registry.add(sub, [opt] { return reveal(*opt); });
    }
    {
        auto opt = std::make_shared<SetOptions>();
        auto * sub = app.add_subcommand("clots", "Clots inside a vertex set");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--set", opt->set, "Vertex set (default: all vertices)");
        registry.add(sub, [opt] { return clots(*opt); });
    }
    {
        auto opt = std::make_shared<SetOptions>();
        auto * sub = app.add_subcommand("obstruction", "Minimal non-choosability implies degenerates or a clot");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--set", opt->set, "Vertex set (default: all vertices)");
        sub->add_option("--sweep", opt->sweep, "Check every connected set of at most this size instead");
        sub->add_option("--universe", opt->universe, "Palette size for the lists")->check(CLI::Range(2, 31));
        sub->add_option("--vertex-cap", opt->vertex_cap, "Largest component decided exhaustively");
        registry.add(sub, [&global, opt] { return obstruction(global, *opt); });
    }
    {
        auto opt = std::make_shared<CountOptions>();
        auto * sub = app.add_subcommand("count", "Stars, constellations, rainbow objects, prestars, preconstellations");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--what", opt->what, "What to count")
            ->check(CLI::IsMember({"stars", "constellations", "rainbow", "prestars", "preconstellations"}));
        sub->add_option("--r", opt->r, "Star size is r-1 edges")->check(CLI::Range(2, 31));
        sub->add_option("--colouring", opt->colouring, "Partial colouring for rainbow, one entry per vertex");
        sub->add_option("--modulus", opt->modulus, "N for prestars");
        sub->add_option("--sets", opt->sets, "Y_1;...;Y_t for prestars, e.g. '1,2;3,5'");
        registry.add(sub, [opt] { return count(*opt); });
    }
}

} // namespace cli
