#include "ccrgraph/graph_io.hpp"

#include "text_util.hpp"

#include <iterator>
#include <istream>
#include <sstream>

namespace ccrgraph::graph {

Graph parse_graph(std::string_view text)
{
    const auto lines = detail::split_lines(text, false);
    if (lines.empty())
        throw ParseError("graph text is empty; expected 'n=<int>'");
    const std::size_t n = detail::parse_header(lines.front(), "n");
    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        std::istringstream fields{std::string(line.text)};
        std::string a;
        std::string b;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(line.number) + ": expected an edge 'u v'");
        const std::size_t u = detail::parse_index(a, line.number);
        const std::size_t v = detail::parse_index(b, line.number);
        if (u >= n || v >= n)
            throw ParseError("line " + std::to_string(line.number) + ": vertex out of range for n=" + std::to_string(n));
        if (u == v)
            throw ParseError("line " + std::to_string(line.number) + ": self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph read_graph(std::istream& in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

std::string format_graph(const Graph& g)
{
    std::string out = "n=" + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels)
{
    std::string out = "graph G {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out += "  " + std::to_string(v);
        if (v < labels.size())
            out += " [label=\"" + labels[v] + "\"]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace ccrgraph::graph
