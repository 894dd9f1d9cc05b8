#ifndef KCLIQUE_SOLVER_HH
#define KCLIQUE_SOLVER_HH

#include <kclique/graph.hh>

#include <chrono>
#include <optional>
#include <vector>

namespace kclique {

/// Constructive greedy colouring: order holds vertices in the order they
/// were coloured, bounds[i] the number of colours used on the first i+1
/// of them. bounds is non-decreasing, which is what makes it usable as a
/// branch-and-bound pruning bound.
struct ColourOrder {
    std::vector<int> order;
    std::vector<int> bounds;
};

ColourOrder colour_order(const Graph & g, const VertexSet & p);

/// True iff v dominates w: N(w) - v is a subset of N(v) - w.
bool dominated_by(const Graph & g, int v, int w);

/// Per-vertex sets of dominated vertices, computed against the full
/// graph on first demand and then reused for the rest of the search.
class DominationCache {
public:
    explicit DominationCache(const Graph & g);

    const VertexSet & dominated_set(int v);

    long long sets_computed() const { return computed_; }

private:
    const Graph & graph_;
    std::vector<std::optional<VertexSet>> sets_;
    long long computed_ = 0;
};

struct SolverOptions {
    bool use_domination = true;
    std::optional<long long> node_limit;
    std::optional<std::chrono::duration<double>> time_limit;
};

struct SearchStats {
    long long nodes = 0;
    long long domination_sets_computed = 0;
    std::chrono::duration<double> elapsed{0};
};

struct Solution {
    std::vector<int> members;   // ascending vertex indices of the input graph
    int size = 0;
    SearchStats stats;
    bool optimal = true;
};

/// Maximum clique by branch and bound with the greedy colouring bound
/// and, when enabled, lazy global domination on the reject branch. The
/// graph is searched as given; callers wanting degree order permute
/// first.
Solution solve_max_clique(const Graph & g, const SolverOptions & options = {});

/// Maximum k-clique: builds G^k, permutes it into non-increasing degree
/// order, runs the clique search, and reports members as vertices of the
/// original graph. Elapsed time includes this preprocessing.
Solution solve_max_k_clique(const Graph & g, int k, const SolverOptions & options = {});

}

#endif
