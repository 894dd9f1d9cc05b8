#include <kclique/power.hh>

#include <stdexcept>

namespace kclique {

VertexSet bounded_bfs(const Graph & g, int source, int k)
{
    if (source < 0 || source >= g.size())
        throw std::invalid_argument{"bfs source out of range"};
    if (k < 1)
        throw std::invalid_argument{"bfs depth must be at least 1"};

    VertexSet reached{g.size()};
    VertexSet visited{g.size()};
    visited.set(source);
    VertexSet frontier = visited;

    for (int depth = 0 ; depth < k ; ++depth) {
        VertexSet next{g.size()};
        for (int v : frontier)
            next |= g.neighbourhood(v);
        next.and_not(visited);
        if (next.empty())
            break;
        reached |= next;
        visited |= next;
        frontier = std::move(next);
    }

    return reached;
}

PowerGraph power_graph(const Graph & g, int k)
{
    if (k < 1)
        throw std::invalid_argument{"graph power must be at least 1"};

    int n = g.size();
    Graph result{n};
    bool complete = true;
    for (int v = 0 ; v < n ; ++v) {
        VertexSet row = bounded_bfs(g, v, k);
        if (row.count() != n - 1)
            complete = false;
        for (int w : row)
            if (v < w)
                result.add_edge(v, w);
    }

    return PowerGraph{std::move(result), k, complete};
}

}
