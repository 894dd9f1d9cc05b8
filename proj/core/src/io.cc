#include <kclique/io.hh>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace kclique {

namespace {
    std::vector<std::string> tokenise(const std::string & line)
    {
        std::vector<std::string> result;
        std::istringstream s{line};
        std::string token;
        while (s >> token)
            result.push_back(token);
        return result;
    }

    template <typename Integer>
    std::optional<Integer> to_integer(const std::string & token)
    {
        Integer value{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            return std::nullopt;
        return value;
    }
}

ParseError::ParseError(int line, const std::string & message) :
    std::runtime_error{"line " + std::to_string(line) + ": " + message},
    line_(line)
{
}

std::optional<int> Instance::vertex_for_label(std::uint64_t label) const
{
    for (std::size_t v = 0 ; v < labels.size() ; ++v)
        if (labels[v] == label)
            return int(v);
    return std::nullopt;
}

Instance parse_dimacs(std::istream & in)
{
    std::optional<Graph> graph;
    std::string line;
    int line_number = 0;

    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = tokenise(line);
        if (tokens.empty())
            continue;

        if (tokens[0] == "c")
            continue;
        else if (tokens[0] == "p") {
            if (graph)
                throw ParseError{line_number, "duplicate 'p' line"};
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError{line_number, "expected 'p edge <n> <m>'"};
            auto n = to_integer<int>(tokens[2]);
            auto m = to_integer<long long>(tokens[3]);
            if (! n || ! m || *n < 0 || *m < 0)
                throw ParseError{line_number, "bad vertex or edge count"};
            graph.emplace(*n);
        }
        else if (tokens[0] == "e") {
            if (! graph)
                throw ParseError{line_number, "edge before 'p' line"};
            if (tokens.size() != 3)
                throw ParseError{line_number, "expected 'e <u> <v>'"};
            auto u = to_integer<int>(tokens[1]);
            auto v = to_integer<int>(tokens[2]);
            if (! u || ! v)
                throw ParseError{line_number, "edge endpoints must be integers"};
            if (*u < 1 || *u > graph->size() || *v < 1 || *v > graph->size())
                throw ParseError{line_number, "edge endpoint out of range 1.."
                    + std::to_string(graph->size())};
            graph->add_edge(*u - 1, *v - 1);
        }
        else
            throw ParseError{line_number, "unrecognised line type '" + tokens[0] + "'"};
    }

    if (! graph)
        throw ParseError{line_number, "no 'p' line found"};

    Instance result;
    result.labels.resize(graph->size());
    for (int v = 0 ; v < graph->size() ; ++v)
        result.labels[v] = std::uint64_t(v) + 1;
    result.graph = std::move(*graph);
    return result;
}

Instance parse_edge_list(std::istream & in)
{
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> labels;
    std::unordered_map<std::uint64_t, int> vertex_of;

    auto intern = [&] (std::uint64_t label) {
        auto [it, inserted] = vertex_of.emplace(label, int(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = tokenise(line);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        if (tokens.size() != 2)
            throw ParseError{line_number, "expected two vertex labels"};
        auto u = to_integer<std::uint64_t>(tokens[0]);
        auto v = to_integer<std::uint64_t>(tokens[1]);
        if (! u)
            throw ParseError{line_number, "'" + tokens[0] + "' is not a non-negative integer"};
        if (! v)
            throw ParseError{line_number, "'" + tokens[1] + "' is not a non-negative integer"};
        int from = intern(*u);   // sequenced: interning order fixes vertex numbering
        int to = intern(*v);
        edges.emplace_back(from, to);
    }

    Instance result;
    result.graph = Graph{int(labels.size())};
    result.labels = std::move(labels);
    for (auto [u, v] : edges)
        result.graph.add_edge(u, v);
    return result;
}

void write_dimacs(const Graph & g, std::ostream & out)
{
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (int v = 0 ; v < g.size() ; ++v)
        for (int w : g.neighbourhood(v))
            if (v < w)
                out << "e " << v + 1 << ' ' << w + 1 << '\n';
}

void write_edge_list(const Instance & instance, std::ostream & out)
{
    const Graph & g = instance.graph;
    for (int v = 0 ; v < g.size() ; ++v)
        out << instance.labels[v] << ' ' << instance.labels[v] << '\n';
    for (int v = 0 ; v < g.size() ; ++v)
        for (int w : g.neighbourhood(v))
            if (v < w)
                out << instance.labels[v] << ' ' << instance.labels[w] << '\n';
}

Instance read_instance(const std::string & path, FileFormat format)
{
    std::ifstream in{path};
    if (! in)
        throw std::runtime_error{"cannot open '" + path + "'"};
    return FileFormat::dimacs == format ? parse_dimacs(in) : parse_edge_list(in);
}

}
