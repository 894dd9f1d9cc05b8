#ifndef KCLIQUE_IO_HH
#define KCLIQUE_IO_HH

#include <kclique/graph.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kclique {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & message);

    int line() const { return line_; }

private:
    int line_;
};

/// A graph together with the labels vertices carried in the input file;
/// labels[v] is the original label of internal vertex v.
struct Instance {
    Graph graph;
    std::vector<std::uint64_t> labels;

    std::optional<int> vertex_for_label(std::uint64_t label) const;

    friend bool operator== (const Instance &, const Instance &) = default;
};

/// DIMACS clique format: 'c' comment lines, one 'p edge <n> <m>' line,
/// then 'e <u> <v>' lines with 1-indexed endpoints. Duplicate edges are
/// idempotent and loop lines are dropped.
Instance parse_dimacs(std::istream & in);

/// Plain edge list: each non-empty, non-'#' line holds two non-negative
/// integer labels. Labels map densely to 0..n-1 in first-appearance
/// order; loop lines register the vertex but add no edge.
Instance parse_edge_list(std::istream & in);

void write_dimacs(const Graph & g, std::ostream & out);

/// Writes one 'L L' declaration line per vertex (pinning first-appearance
/// order and keeping isolated vertices), then the edges in ascending
/// order, so parse_edge_list reproduces the instance exactly.
void write_edge_list(const Instance & instance, std::ostream & out);

enum class FileFormat { dimacs, edge_list };

Instance read_instance(const std::string & path, FileFormat format);

}

#endif
