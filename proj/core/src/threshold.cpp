#include <ramsey/threshold.hpp>

#include <ramsey/density.hpp>
#include <ramsey/families.hpp>
#include <ramsey/rational.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ramsey {

std::string_view to_string(Family family) noexcept
{
    switch (family) {
    case Family::copies: return "copies";
    case Family::kap: return "kap";
    case Family::schur: return "schur";
    }
    return "schur";
}

Family family_from_string(std::string_view name)
{
    if (name == "copies")
        return Family::copies;
    if (name == "kap")
        return Family::kap;
    if (name == "schur")
        return Family::schur;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

UniformHypergraph build_family(const FamilySpec & spec)
{
    switch (spec.family) {
    case Family::copies: return build_copies_hypergraph(spec.pattern, spec.size);
    case Family::kap: return build_kap_hypergraph(spec.k, spec.size);
    case Family::schur: return build_schur_hypergraph(spec.size);
    }
    throw std::invalid_argument("unknown family");
}

double family_exponent(const FamilySpec & spec)
{
    switch (spec.family) {
    case Family::copies: return to_double(two_density(spec.pattern).value);
    case Family::kap: return static_cast<double>(spec.k - 1);
    case Family::schur: return 2.0;
    }
    return 1.0;
}

std::vector<double> isotonic_fit(const std::vector<double> & values, const std::vector<double> & weights)
{
    struct Block {
        double mean;
        double weight;
        std::size_t length;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < values.size(); ++i) {
        blocks.push_back({values[i], weights[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
            auto top = blocks.back();
            blocks.pop_back();
            auto & below = blocks.back();
            double w = below.weight + top.weight;
            below.mean = w > 0 ? (below.mean * below.weight + top.mean * top.weight) / w : (below.mean + top.mean) / 2;
            below.weight = w;
            below.length += top.length;
        }
    }
    std::vector<double> fit;
    fit.reserve(values.size());
    for (const auto & b : blocks)
        fit.insert(fit.end(), b.length, b.mean);
    return fit;
}

std::optional<double> crossing(const std::vector<double> & grid, const std::vector<double> & fit, double level)
{
    if (fit.empty() || fit.front() >= level)
        return std::nullopt;
    for (std::size_t i = 1; i < fit.size(); ++i)
        if (fit[i] >= level) {
            double t = (level - fit[i - 1]) / (fit[i] - fit[i - 1]);
            return grid[i - 1] + t * (grid[i] - grid[i - 1]);
        }
    return std::nullopt;
}

ThresholdCurve threshold_curve(const FamilySpec & family, const std::vector<double> & grid, std::uint64_t trials,
    std::uint64_t seed, unsigned workers, SearchLimits limits)
{
    if (grid.empty())
        throw std::invalid_argument("empty p grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
            throw std::invalid_argument("grid value " + format_double(grid[i]) + " outside [0, 1]");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
    }
    if (trials == 0)
        throw std::invalid_argument("at least one trial is needed");

    auto h = build_family(family);
    PropertySpec property;
    property.kind = PropertyKind::non_colourable;
    property.r = family.r;
    property.limits = limits;

    ThresholdCurve curve;
    std::vector<double> raw, weights;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        SampleConfig config{grid[g], trials, seed, g * trials};
        auto result = monte_carlo(h, config, property, workers);
        raw.push_back(result.frequency);
        weights.push_back(static_cast<double>(result.trials - result.inconclusive));
        curve.points.push_back({grid[g], result});
    }
    curve.isotonic = isotonic_fit(raw, weights);
    curve.p_hat = crossing(grid, curve.isotonic, 0.5);
    curve.p10 = crossing(grid, curve.isotonic, 0.1);
    curve.p90 = crossing(grid, curve.isotonic, 0.9);
    if (curve.p10 && curve.p90)
        curve.width = *curve.p90 - *curve.p10;
    curve.exponent = family_exponent(family);
    if (curve.p_hat)
        curve.scaled = *curve.p_hat * std::pow(static_cast<double>(family.size), 1.0 / curve.exponent);
    return curve;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s)
{
    s = trim(s);
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    return x;
}

template <typename Int>
Int parse_int(std::string_view s)
{
    s = trim(s);
    Int x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return x;
}

} // namespace

std::vector<double> parse_grid(std::string_view text)
{
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos) {
        auto a = text.find(':');
        auto b = text.find(':', a + 1);
        if (b == std::string_view::npos)
            throw std::invalid_argument("grid range needs start:stop:count");
        double lo = parse_double(text.substr(0, a));
        double hi = parse_double(text.substr(a + 1, b - a - 1));
        auto count = parse_int<int>(text.substr(b + 1));
        if (count < 1)
            throw std::invalid_argument("grid count must be positive");
        for (int i = 0; i < count; ++i)
            grid.push_back(count == 1 ? lo : (lo * (count - 1 - i) + hi * i) / (count - 1));
        return grid;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        grid.push_back(parse_double(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return grid;
}

ExperimentConfig read_experiment_config(std::istream & in)
{
    ExperimentConfig config;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(number, "expected key = value");
        auto key = trim(view.substr(0, eq));
        auto value = trim(view.substr(eq + 1));
        try {
            if (key == "family")
                config.family.family = family_from_string(value);
            else if (key == "size")
                config.family.size = parse_int<Vertex>(value);
            else if (key == "r")
                config.family.r = parse_int<int>(value);
            else if (key == "k")
                config.family.k = parse_int<int>(value);
            else if (key == "graph")
                config.family.pattern = graph_from_spec(value);
            else if (key == "grid")
                config.grid = parse_grid(value);
            else if (key == "trials")
                config.trials = parse_int<std::uint64_t>(value);
            else if (key == "seed")
                config.seed = parse_int<std::uint64_t>(value);
            else
                throw std::invalid_argument("unknown key '" + std::string(key) + "'");
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(number, e.what());
        }
    }
    return config;
}

std::string format_double(double x)
{
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, ptr);
}

void write_curve_csv(std::ostream & out, const ThresholdCurve & curve)
{
    out << "p,successes,trials,freq,wilson_lo,wilson_hi\n";
    for (const auto & point : curve.points)
        out << format_double(point.p) << ',' << point.result.successes << ','
            << point.result.trials - point.result.inconclusive << ',' << format_double(point.result.frequency) << ','
            << format_double(point.result.wilson.lo) << ',' << format_double(point.result.wilson.hi) << '\n';
}

} // namespace ramsey
