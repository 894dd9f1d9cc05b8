#ifndef KCLIQUE_POWER_HH
#define KCLIQUE_POWER_HH

#include <kclique/graph.hh>

namespace kclique {

/// G^k, plus a flag recording that every vertex reached all others
/// within k steps (so the power graph is complete).
struct PowerGraph {
    Graph graph;
    int k;
    bool complete;
};

/// Vertices at BFS distance 1..k from source, excluding source itself.
VertexSet bounded_bfs(const Graph & g, int source, int k);

/// Graph on the same vertices with an edge between distinct v, w iff
/// their distance in g is at most k.
PowerGraph power_graph(const Graph & g, int k);

}

#endif
