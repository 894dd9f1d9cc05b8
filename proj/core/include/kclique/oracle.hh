#ifndef KCLIQUE_ORACLE_HH
#define KCLIQUE_ORACLE_HH

#include <kclique/graph.hh>
#include <kclique/solver.hh>

#include <vector>

namespace kclique {

/// Pairwise hop distances. Unreachable pairs hold the sentinel value n,
/// which is strictly greater than any achievable distance; compare
/// against unreachable() rather than treating it as a number, since a
/// distance bound k may well exceed n.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n);

    int size() const { return n_; }
    int unreachable() const { return n_; }

    int at(int v, int w) const { return distances_[std::size_t(v) * n_ + w]; }
    int & at(int v, int w) { return distances_[std::size_t(v) * n_ + w]; }

private:
    int n_;
    std::vector<int> distances_;
};

/// Queue-based BFS from every vertex; shares no traversal code with the
/// frontier-bitset construction it is used to cross-check.
DistanceMatrix all_pairs_distances(const Graph & g);

/// Exact maximum clique by plain recursive enumeration over ascending
/// candidates, pruned only by the candidate count. No colouring, no
/// domination. Soft limit n <= 32.
Solution brute_force_max_clique(const Graph & g);

/// All distinct pairs adjacent.
bool verify_clique(const Graph & g, const std::vector<int> & members);

/// All distinct pairs within distance k in the full graph.
bool verify_k_clique(const Graph & g, int k, const std::vector<int> & members);

/// All distinct pairs within distance k using only paths inside the
/// subgraph induced by members.
bool verify_k_club(const Graph & g, int k, const std::vector<int> & members);

}

#endif
