#ifndef KCLIQUE_TEST_HELPERS_HH
#define KCLIQUE_TEST_HELPERS_HH

#include <kclique/graph.hh>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kclique::test {

inline Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g{n};
    for (auto [v, w] : edges)
        g.add_edge(v, w);
    return g;
}

/// The 8-vertex sample graph used throughout the tests: its unique
/// maximum clique is {0, 1, 4, 7}, its maximum 2-clique has size 7, and
/// a 3-clique covers all of it.
inline Graph sample8()
{
    return graph_from_edges(8, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
        {1, 7}, {2, 6}, {3, 4}, {4, 5}, {4, 7}, {5, 6}});
}

inline std::string sample8_dimacs()
{
    return "c 8-vertex sample instance\n"
        "p edge 8 12\n"
        "e 1 2\ne 1 5\ne 1 8\ne 2 3\ne 2 4\ne 2 5\ne 2 8\n"
        "e 3 7\ne 4 5\ne 5 6\ne 5 8\ne 6 7\n";
}

inline Graph path(int n)
{
    Graph g{n};
    for (int v = 0 ; v + 1 < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    if (n > 2)
        g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n)
{
    Graph g{n};
    for (int v = 0 ; v < n ; ++v)
        for (int w = v + 1 ; w < n ; ++w)
            g.add_edge(v, w);
    return g;
}

inline Graph star(int centre, int n)
{
    Graph g{n};
    for (int v = 0 ; v < n ; ++v)
        if (v != centre)
            g.add_edge(centre, v);
    return g;
}

inline std::vector<int> set_bits(const VertexSet & s)
{
    return s.members();
}

}

#endif
