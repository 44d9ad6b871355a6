#pragma once

#include "ccrgraph/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccrgraph::graph {

// Text format: first line "n=<int>", then one "u v" edge per line (0-based,
// whitespace-separated). '#' starts a comment. Throws ParseError.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
std::string format_graph(const Graph& g);

// Graphviz "graph { ... }". Optional per-vertex labels.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

} // namespace ccrgraph::graph
