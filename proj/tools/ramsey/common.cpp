#include "common.hpp"

#include <ramsey/families.hpp>
#include <ramsey/text_io.hpp>
#include <ramsey/threshold.hpp>

#include <charconv>

namespace cli {

void add_global_options(CLI::App & app, GlobalOptions & options)
{
    app.add_option("--format", options.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", options.output, "Write to this file instead of standard output");
    app.add_option("--max-nodes", options.max_nodes, "Search node budget (0 = unlimited)");
    app.add_option("--timeout-ms", options.timeout_ms, "Search time budget in ms (0 = unlimited)")->check(CLI::NonNegativeNumber);
    app.add_flag("--no-timing", options.no_timing, "Leave wall_ms out of the report");
}

void add_hypergraph_source(CLI::App & app, HypergraphSource & source)
{
    app.add_option("--family", source.family, "Built-in family")->check(CLI::IsMember({"copies", "kap", "schur"}));
    app.add_option("--size", source.size, "n for copies, N for kap and schur");
    app.add_option("--k", source.k, "Progression length for kap");
    app.add_option("--pattern", source.pattern, "Graph H for copies (atlas spec)");
    app.add_flag("--exclude-zero", source.exclude_zero, "Schur: drop residue 0");
    app.add_option("--input", source.input, "Hypergraph file (header 's n m')");
}

ramsey::UniformHypergraph HypergraphSource::load() const
{
    if (family.empty() == input.empty())
        throw UsageError("give exactly one of --family and --input");
    if (!input.empty()) {
        try {
            return ramsey::read_hypergraph_file(input);
        }
        catch (const ramsey::ParseError & e) {
            throw InputError(input + ": " + e.what());
        }
    }
    if (size <= 0)
        throw UsageError("--family needs --size");
    if (family == "schur" && exclude_zero)
        return ramsey::build_schur_hypergraph(size, true);
    ramsey::FamilySpec spec;
    spec.family = ramsey::family_from_string(family);
    spec.size = size;
    spec.k = k;
    spec.pattern = ramsey::graph_from_spec(pattern);
    return ramsey::build_family(spec);
}

Json HypergraphSource::describe() const
{
    Json j;
    if (!input.empty()) {
        j["input"] = input;
        return j;
    }
    j["family"] = family;
    j["size"] = size;
    if (family == "kap")
        j["k"] = k;
    if (family == "copies")
        j["pattern"] = pattern;
    if (family == "schur" && exclude_zero)
        j["exclude_zero"] = true;
    return j;
}

ramsey::Graph load_graph(const std::string & spec, const std::string & file)
{
    if (spec.empty() == file.empty())
        throw UsageError("give exactly one of a graph spec and a graph file");
    if (!file.empty()) {
        try {
            return ramsey::read_graph_file(file);
        }
        catch (const ramsey::ParseError & e) {
            throw InputError(file + ": " + e.what());
        }
    }
    return ramsey::graph_from_spec(spec);
}

Json describe_graph(const std::string & spec, const std::string & file)
{
    return spec.empty() ? Json{{"file", file}} : Json{{"graph", spec}};
}

namespace {

Vertex parse_int(std::string_view token)
{
    while (!token.empty() && token.front() == ' ')
        token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
        token.remove_suffix(1);
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

} // namespace

std::vector<Vertex> parse_vertex_list(std::string_view text)
{
    std::vector<Vertex> out;
    if (text.empty())
        return out;
    for (auto token : split(text, ','))
        out.push_back(parse_int(token));
    return out;
}

std::vector<std::vector<Vertex>> parse_set_list(std::string_view text)
{
    std::vector<std::vector<Vertex>> out;
    for (auto part : split(text, ';'))
        out.push_back(parse_vertex_list(part));
    return out;
}

Json verdict_json(ramsey::Verdict v)
{
    switch (v) {
    case ramsey::Verdict::yes: return true;
    case ramsey::Verdict::no: return false;
    case ramsey::Verdict::inconclusive: break;
    }
    return "inconclusive";
}

Json to_json(const ramsey::Graph & g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

namespace {

bool is_flat(const Json & value)
{
    if (!value.is_array())
        return !value.is_object() || value.empty();
    for (const auto & item : value)
        if (!is_flat(item) || (item.is_array() && item.size() > 8))
            return false;
    return true;
}

// Like dump(2), but arrays of scalars (and short arrays of those) stay on one line.
void pretty(std::ostream & out, const Json & value, int indent)
{
    if (is_flat(value)) {
        out << value.dump();
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    bool object = value.is_object();
    out << (object ? "{\n" : "[\n");
    std::size_t i = 0;
    for (auto it = value.begin(); it != value.end(); ++it, ++i) {
        out << pad;
        if (object)
            out << Json(it.key()).dump() << ": ";
        pretty(out, it.value(), indent + 2);
        out << (i + 1 < value.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << (object ? '}' : ']');
}

std::string scalar_text(const Json & value)
{
    if (value.is_string())
        return value.get<std::string>();
    return value.dump();
}

void flatten(const Json & value, const std::string & prefix, std::vector<std::pair<std::string, std::string>> & out)
{
    if (value.is_object() && !value.empty()) {
        for (auto it = value.begin(); it != value.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        return;
    }
    out.emplace_back(prefix, scalar_text(value));
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void write_csv_row(std::ostream & out, const std::vector<std::string> & row)
{
    for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
}

} // namespace

void render(std::ostream & out, const Outcome & outcome, const std::string & format)
{
    if (format == "json") {
        pretty(out, outcome.doc, 0);
        out << '\n';
        return;
    }
    if (format == "text" && outcome.text) {
        out << *outcome.text;
        return;
    }
    std::vector<std::pair<std::string, std::string>> fields;
    flatten(outcome.doc, "", fields);
    if (format == "text") {
        for (const auto & [key, value] : fields)
            out << key << ": " << value << '\n';
        return;
    }
    if (outcome.table) {
        write_csv_row(out, outcome.table->header);
        for (const auto & row : outcome.table->rows)
            write_csv_row(out, row);
        return;
    }
    std::vector<std::string> keys, values;
    for (auto & [key, value] : fields) {
        keys.push_back(key);
        values.push_back(value);
    }
    write_csv_row(out, keys);
    write_csv_row(out, values);
}

} // namespace cli
