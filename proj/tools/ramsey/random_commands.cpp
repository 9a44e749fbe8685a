#include "common.hpp"

#include <ramsey/janson.hpp>
#include <ramsey/sampling.hpp>
#include <ramsey/text_io.hpp>
#include <ramsey/threshold.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace cli {

namespace {

Json optional_json(const std::optional<double> & x)
{
    return x ? Json(*x) : Json(nullptr);
}

std::uint64_t require_seed(const std::optional<std::uint64_t> & seed)
{
    if (!seed)
        throw UsageError("--seed is required for sampling");
    return *seed;
}

// ---- sample ----------------------------------------------------------------

struct SampleOptions {
    HypergraphSource source;
    std::string property = "non-colourable";
    double p = 0.0;
    std::uint64_t trials = 100;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    int r = 2;
    int max_subset = 3;
    int universe = 4;
};

Outcome sample(const GlobalOptions & global, const SampleOptions & opt)
{
    auto h = opt.source.load();
    ramsey::PropertySpec property;
    property.kind = ramsey::property_from_string(opt.property);
    property.r = opt.r;
    property.k = property.kind == ramsey::PropertyKind::list_vdw ? opt.source.k : opt.max_subset;
    property.choosability.universe = opt.universe;
    property.choosability.limits = global.limits();
    property.limits = global.limits();
    if ((property.kind == ramsey::PropertyKind::list_schur && opt.source.family != "schur")
        || (property.kind == ramsey::PropertyKind::list_vdw && opt.source.family != "kap")
        || (property.kind == ramsey::PropertyKind::list_schur && opt.source.exclude_zero))
        throw UsageError(opt.property + " samples from the matching built-in family (schur or kap, residues as vertices)");

    ramsey::SampleConfig config{opt.p, opt.trials, require_seed(opt.seed), 0};
    auto result = ramsey::monte_carlo(h, config, property, opt.workers);
    Outcome out;
    out.timed = false;
    auto & doc = out.doc;
    doc["property"] = opt.property;
    doc["instance"] = opt.source.describe();
    doc["p"] = opt.p;
    doc["seed"] = config.seed;
    doc["trials"] = result.trials;
    doc["successes"] = result.successes;
    doc["inconclusive"] = result.inconclusive;
    doc["frequency"] = result.frequency;
    doc["wilson"] = {result.wilson.lo, result.wilson.hi};
    out.inconclusive = result.inconclusive > 0;
    return out;
}

// ---- curve -----------------------------------------------------------------

struct CurveOptions {
    std::string config;
    std::string family;
    Vertex size = 0;
    std::optional<int> r, k;
    std::string pattern;
    std::string grid;
    std::optional<std::uint64_t> trials, seed;
    unsigned workers = 1;
};

Outcome curve(const GlobalOptions & global, const CurveOptions & opt)
{
    ramsey::ExperimentConfig cfg;
    bool have_family = false;
    if (!opt.config.empty()) {
        std::ifstream in(opt.config);
        if (!in)
            throw UsageError("cannot open " + opt.config);
        try {
            cfg = ramsey::read_experiment_config(in);
        }
        catch (const ramsey::ParseError & e) {
            throw InputError(opt.config + ": " + e.what());
        }
        have_family = true;
    }
    // Flags override the file.
    if (!opt.family.empty()) {
        cfg.family.family = ramsey::family_from_string(opt.family);
        have_family = true;
    }
    if (opt.size > 0)
        cfg.family.size = opt.size;
    if (opt.r)
        cfg.family.r = *opt.r;
    if (opt.k)
        cfg.family.k = *opt.k;
    if (!opt.pattern.empty())
        cfg.family.pattern = ramsey::graph_from_spec(opt.pattern);
    if (!opt.grid.empty())
        cfg.grid = ramsey::parse_grid(opt.grid);
    if (opt.trials)
        cfg.trials = *opt.trials;
    if (opt.seed)
        cfg.seed = opt.seed;
    if (!have_family || cfg.family.size <= 0)
        throw UsageError("curve needs --family and --size (or a --config file)");
    if (cfg.grid.empty())
        throw UsageError("curve needs a grid");
    auto seed = require_seed(cfg.seed);

    auto c = ramsey::threshold_curve(cfg.family, cfg.grid, cfg.trials, seed, opt.workers, global.limits());
    Outcome out;
    out.timed = false;
    auto & doc = out.doc;
    doc["family"] = ramsey::to_string(cfg.family.family);
    doc["size"] = cfg.family.size;
    doc["r"] = cfg.family.r;
    if (cfg.family.family == ramsey::Family::kap)
        doc["k"] = cfg.family.k;
    if (cfg.family.family == ramsey::Family::copies)
        doc["pattern"] = to_json(cfg.family.pattern);
    doc["trials"] = cfg.trials;
    doc["seed"] = seed;
    doc["exponent"] = c.exponent;
    doc["p_hat"] = optional_json(c.p_hat);
    doc["p10"] = optional_json(c.p10);
    doc["p90"] = optional_json(c.p90);
    doc["width"] = optional_json(c.width);
    doc["scaled"] = optional_json(c.scaled);
    Json points = Json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto & pt = c.points[i];
        points.push_back({{"p", pt.p}, {"successes", pt.result.successes},
            {"trials", pt.result.trials - pt.result.inconclusive}, {"inconclusive", pt.result.inconclusive},
            {"freq", pt.result.frequency}, {"wilson_lo", pt.result.wilson.lo}, {"wilson_hi", pt.result.wilson.hi},
            {"fit", c.isotonic[i]}});
        out.inconclusive = out.inconclusive || pt.result.inconclusive > 0;
    }
    doc["points"] = points;

    std::ostringstream csv;
    ramsey::write_curve_csv(csv, c);
    Table table;
    std::istringstream lines(csv.str());
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');)
            cells.push_back(cell);
        if (first)
            table.header = std::move(cells);
        else
            table.rows.push_back(std::move(cells));
        first = false;
    }
    out.table = std::move(table);
    return out;
}

// ---- janson ----------------------------------------------------------------

struct JansonOptions {
    HypergraphSource source;
    double p = 0.0;
    std::optional<double> t, t_fraction;
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::optional<double> coarseness;
    unsigned workers = 1;
};

Outcome janson(const JansonOptions & opt)
{
    auto h = opt.source.load();
    if (opt.t && opt.t_fraction)
        throw UsageError("--t and --t-fraction are exclusive");
    ramsey::JansonInput input{h.vertex_count(), h.edge_list(), opt.p, 0.0};
    double mu = ramsey::janson_bound(input).mu;
    input.t = opt.t ? *opt.t : mu * opt.t_fraction.value_or(0.5);
    auto result = ramsey::janson_bound(input);

    Outcome out;
    out.timed = false;
    auto & doc = out.doc;
    doc["instance"] = opt.source.describe();
    doc["p"] = opt.p;
    doc["t"] = input.t;
    doc["mu"] = result.mu;
    doc["var_prime"] = result.var_prime;
    doc["bound"] = result.bound;
    if (opt.trials > 0) {
        auto seed = require_seed(opt.seed);
        auto mc = ramsey::janson_monte_carlo(input, opt.trials, seed, opt.workers);
        doc["monte_carlo"] = {{"seed", seed}, {"trials", mc.trials}, {"hits", mc.hits}, {"frequency", mc.frequency},
            {"sigma", mc.sigma}, {"within", mc.within}};
    }
    if (opt.coarseness) {
        if (opt.trials == 0)
            throw UsageError("--coarseness needs --trials");
        auto seed = require_seed(opt.seed);
        auto cr = ramsey::local_coarseness_check(input.sets, input.ground, opt.p, *opt.coarseness, opt.trials, seed,
            opt.workers);
        doc["coarseness"] = {{"c", *opt.coarseness}, {"k", cr.k}, {"mu_p", cr.mu_p}, {"mu_cp", cr.mu_cp},
            {"lower", cr.lower}, {"sigma", cr.sigma}, {"holds", cr.holds}};
    }
    return out;
}

void add_sampling_flags(CLI::App & sub, std::optional<std::uint64_t> & seed, unsigned & workers)
{
    sub.add_option("--seed", seed, "RNG seed (required for sampling)");
    sub.add_option("--workers", workers, "Worker threads; output does not depend on it")->check(CLI::Range(1u, 256u));
}

} // namespace

void add_random_commands(CLI::App & app, Registry & registry, const GlobalOptions & global)
{
    {
        auto opt = std::make_shared<SampleOptions>();
        auto * sub = app.add_subcommand("sample", "Monte Carlo frequency of a property of H[V_p]");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--property", opt->property, "non-colourable, contains-clot, has-degenerates, "
                                                     "non-choosable-subset, list-schur or list-vdw");
        sub->add_option("--p", opt->p, "Vertex retention probability")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--trials", opt->trials, "Number of trials");
        sub->add_option("--r", opt->r, "Colours for non-colourable")->check(CLI::Range(1, 31));
        sub->add_option("--max-subset", opt->max_subset, "Subset size bound for non-choosable-subset");
        sub->add_option("--universe", opt->universe, "Palette size for choosability properties")->check(CLI::Range(2, 31));
        add_sampling_flags(*sub, opt->seed, opt->workers);
        registry.add(sub, [&global, opt] { return sample(global, *opt); });
    }
    {
        auto opt = std::make_shared<CurveOptions>();
        auto * sub = app.add_subcommand("curve", "Threshold curve of non-colourability over a p grid");
        sub->add_option("--config", opt->config, "Experiment config file (key = value)");
        sub->add_option("--family", opt->family, "copies, kap or schur")->check(CLI::IsMember({"copies", "kap", "schur"}));
        sub->add_option("--size", opt->size, "n for copies, N otherwise");
        sub->add_option("--r", opt->r, "Number of colours")->check(CLI::Range(1, 31));
        sub->add_option("--k", opt->k, "Progression length for kap");
        sub->add_option("--pattern", opt->pattern, "Graph H for copies");
        sub->add_option("--grid", opt->grid, "Comma list or start:stop:count");
        sub->add_option("--trials", opt->trials, "Trials per grid point");
        add_sampling_flags(*sub, opt->seed, opt->workers);
        registry.add(sub, [&global, opt] { return curve(global, *opt); });
    }
    {
        auto opt = std::make_shared<JansonOptions>();
        auto * sub = app.add_subcommand("janson", "Janson lower-tail bound for the edges of a hypergraph, with optional Monte Carlo");
        add_hypergraph_source(*sub, opt->source);
        sub->add_option("--p", opt->p, "Retention probability")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--t", opt->t, "Deviation below the mean");
        sub->add_option("--t-fraction", opt->t_fraction, "Deviation as a fraction of the mean (default 0.5)")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_option("--trials", opt->trials, "Monte Carlo trials (0 = bound only)");
        sub->add_option("--coarseness", opt->coarseness, "Also check mu(cp) >= c^K mu(p) for this c")
            ->check(CLI::Range(0.0, 1.0));
        add_sampling_flags(*sub, opt->seed, opt->workers);
        registry.add(sub, [opt] { return janson(*opt); });
    }
}

} // namespace cli
