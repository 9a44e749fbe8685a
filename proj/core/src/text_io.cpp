#include <ramsey/text_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace ramsey {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream & in) : in_(in) {}

    // Next non-blank, non-comment line split into integers. False at end of input.
    bool next(std::vector<long long> & fields)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            fields.clear();
            std::istringstream tokens(line);
            std::string token;
            while (tokens >> token) {
                std::size_t used = 0;
                long long value = 0;
                try {
                    value = std::stoll(token, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != token.size())
                    throw ParseError(number_, "expected an integer, got '" + token + "'");
                fields.push_back(value);
            }
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return number_; }

private:
    std::istream & in_;
    std::size_t number_ = 0;
};

void expect_fields(const LineReader & reader, const std::vector<long long> & fields, std::size_t count, const char * what)
{
    if (fields.size() != count)
        throw ParseError(reader.line(), std::string(what) + ": expected " + std::to_string(count) + " fields, got "
            + std::to_string(fields.size()));
}

void expect_vertex(const LineReader & reader, long long v, long long n)
{
    if (v < 0 || v >= n)
        throw ParseError(reader.line(), "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
}

std::ifstream open_or_throw(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

} // namespace

Graph read_graph(std::istream & in)
{
    LineReader reader(in);
    std::vector<long long> fields;
    if (!reader.next(fields))
        throw ParseError(reader.line(), "missing header \"n m\"");
    expect_fields(reader, fields, 2, "graph header");
    auto n = fields[0], m = fields[1];
    if (n < 0 || m < 0)
        throw ParseError(reader.line(), "negative count in header");
    std::vector<GraphEdge> edges;
    std::vector<std::size_t> lines;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(fields))
            throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        expect_fields(reader, fields, 2, "edge line");
        expect_vertex(reader, fields[0], n);
        expect_vertex(reader, fields[1], n);
        if (fields[0] == fields[1])
            throw ParseError(reader.line(), "loop at vertex " + std::to_string(fields[0]));
        edges.emplace_back(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
        lines.push_back(reader.line());
    }
    if (reader.next(fields))
        throw ParseError(reader.line(), "trailing data after " + std::to_string(m) + " edges");

    // Duplicates are reported against the line of the second occurrence.
    std::vector<std::pair<GraphEdge, std::size_t>> sorted;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        sorted.push_back({{std::min(u, v), std::max(u, v)}, lines[i]});
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            throw ParseError(std::max(sorted[i].second, sorted[i - 1].second), "duplicate edge");
    return Graph{static_cast<Vertex>(n), std::move(edges)};
}

UniformHypergraph read_hypergraph(std::istream & in)
{
    LineReader reader(in);
    std::vector<long long> fields;
    if (!reader.next(fields))
        throw ParseError(reader.line(), "missing header \"s n m\"");
    expect_fields(reader, fields, 3, "hypergraph header");
    auto s = fields[0], n = fields[1], m = fields[2];
    if (s < 2)
        throw ParseError(reader.line(), "uniformity must be at least 2");
    if (n < 0 || m < 0)
        throw ParseError(reader.line(), "negative count in header");
    std::vector<std::vector<Vertex>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(fields))
            throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        expect_fields(reader, fields, static_cast<std::size_t>(s), "edge line");
        std::vector<Vertex> edge;
        for (auto v : fields) {
            expect_vertex(reader, v, n);
            edge.push_back(static_cast<Vertex>(v));
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw ParseError(reader.line(), "repeated vertex inside an edge");
        edges.push_back(std::move(edge));
    }
    if (reader.next(fields))
        throw ParseError(reader.line(), "trailing data after " + std::to_string(m) + " edges");
    return UniformHypergraph{static_cast<int>(s), static_cast<Vertex>(n), std::move(edges)};
}

Graph read_graph_file(const std::string & path)
{
    auto in = open_or_throw(path);
    return read_graph(in);
}

UniformHypergraph read_hypergraph_file(const std::string & path)
{
    auto in = open_or_throw(path);
    return read_hypergraph(in);
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_hypergraph(std::ostream & out, const UniformHypergraph & h)
{
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.total_weight() << '\n';
    for (const auto & e : h.edge_list()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

} // namespace ramsey
