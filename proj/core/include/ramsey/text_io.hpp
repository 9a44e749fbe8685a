#pragma once

#include <ramsey/graph.hpp>
#include <ramsey/hypergraph.hpp>

#include <iosfwd>
#include <string>

namespace ramsey {

// Graph files: a header "n m" followed by m lines "u v".
// Hypergraph files: a header "s n m" followed by m lines of s vertices.
// Blank lines and lines starting with '#' are skipped. Errors throw ParseError
// with the 1-based line number.

Graph read_graph(std::istream & in);
UniformHypergraph read_hypergraph(std::istream & in);
Graph read_graph_file(const std::string & path);
UniformHypergraph read_hypergraph_file(const std::string & path);

void write_graph(std::ostream & out, const Graph & g);
void write_hypergraph(std::ostream & out, const UniformHypergraph & h);

} // namespace ramsey
