#pragma once

#include <ramsey/common.hpp>
#include <ramsey/graph.hpp>
#include <ramsey/hypergraph.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;
using ramsey::Vertex;

/// Bad flag combination or value; reported like a parse error (exit 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; the message carries the path and line number.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    Json doc;
    std::optional<Table> table;     // used for --format csv when present
    std::optional<std::string> text; // replaces the flattened text rendering
    bool inconclusive = false;
    bool timed = true;              // sampling commands leave wall_ms out
};

/// Flags every subcommand understands.
struct GlobalOptions {
    std::string format = "json";
    std::string output;
    std::uint64_t max_nodes = 0;
    std::int64_t timeout_ms = 0;
    bool no_timing = false;

    ramsey::SearchLimits limits() const { return {max_nodes, std::chrono::milliseconds{timeout_ms}}; }
};

void add_global_options(CLI::App & app, GlobalOptions & options);

/// Built-in family or hypergraph file; exactly one must be given.
struct HypergraphSource {
    std::string family;
    Vertex size = 0;
    int k = 3;
    std::string pattern = "complete:3";
    bool exclude_zero = false;
    std::string input;

    ramsey::UniformHypergraph load() const;
    Json describe() const;
};

void add_hypergraph_source(CLI::App & app, HypergraphSource & source);

ramsey::Graph load_graph(const std::string & spec, const std::string & file);
Json describe_graph(const std::string & spec, const std::string & file);

std::vector<Vertex> parse_vertex_list(std::string_view text);
/// "1,2;3,4" -> {{1,2},{3,4}}
std::vector<std::vector<Vertex>> parse_set_list(std::string_view text);

Json verdict_json(ramsey::Verdict v);
Json to_json(const ramsey::Graph & g);

using Runner = std::function<Outcome()>;
struct Registry {
    std::vector<std::pair<CLI::App *, Runner>> commands;
    void add(CLI::App * sub, Runner run) { commands.emplace_back(sub, std::move(run)); }
};

void add_graph_commands(CLI::App & app, Registry & registry, const GlobalOptions & global);
void add_hypergraph_commands(CLI::App & app, Registry & registry, const GlobalOptions & global);
void add_random_commands(CLI::App & app, Registry & registry, const GlobalOptions & global);

void render(std::ostream & out, const Outcome & outcome, const std::string & format);

} // namespace cli
