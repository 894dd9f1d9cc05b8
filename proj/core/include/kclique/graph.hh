#ifndef KCLIQUE_GRAPH_HH
#define KCLIQUE_GRAPH_HH

#include <kclique/bitset.hh>

#include <cstdint>
#include <utility>
#include <vector>

namespace kclique {

/// Undirected loop-free graph on vertices 0..n-1 with one adjacency
/// bitset per vertex. Adjacency is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    long long edge_count() const { return edges_; }

    bool adjacent(int v, int w) const { return adj_[v].test(w); }
    const VertexSet & neighbourhood(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Idempotent; loops are dropped.
    void add_edge(int v, int w);

    friend bool operator== (const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    long long edges_ = 0;
    std::vector<VertexSet> adj_;
};

struct Permutation {
    std::vector<int> forward;   // original index -> permuted index
    std::vector<int> inverse;   // permuted index -> original index
};

/// Fraction of distinct vertex pairs joined by an edge; 0 when n < 2.
double density(const Graph & g);

/// Deterministic G(n, p): one variate per pair (v, w), v < w, in
/// lexicographic order, from mt19937_64 seeded with seed; the edge is
/// included iff (next() >> 11) * 2^-53 < p.
Graph generate_gnp(int n, double p, std::uint64_t seed);

/// Isomorphic copy with vertices sorted by non-increasing degree, ties
/// broken by ascending original index.
std::pair<Graph, Permutation> permute_by_degree(const Graph & g);

}

#endif
