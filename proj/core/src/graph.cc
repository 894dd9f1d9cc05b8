#include <kclique/graph.hh>

#include <algorithm>
#include <new>
#include <random>
#include <stdexcept>
#include <string>

namespace kclique {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument{"vertex count must be non-negative"};
    try {
        adj_.assign(n, VertexSet{n});
    }
    catch (const std::bad_alloc &) {
        throw std::runtime_error{"graph with " + std::to_string(n)
            + " vertices is too large for the n^2-bit adjacency encoding"};
    }
}

void Graph::add_edge(int v, int w)
{
    if (v == w)
        return;
    if (! adj_[v].test(w)) {
        adj_[v].set(w);
        adj_[w].set(v);
        ++edges_;
    }
}

double density(const Graph & g)
{
    long long n = g.size();
    if (n < 2)
        return 0.0;
    return double(g.edge_count()) / (double(n) * double(n - 1) / 2.0);
}

Graph generate_gnp(int n, double p, std::uint64_t seed)
{
    if (! (p >= 0.0 && p <= 1.0))
        throw std::invalid_argument{"edge probability must be in [0, 1]"};

    Graph result{n};
    std::mt19937_64 rng{seed};
    for (int v = 0 ; v < n ; ++v)
        for (int w = v + 1 ; w < n ; ++w) {
            // 53-bit variate in [0, 1), independent of library distributions
            double variate = double(rng() >> 11) * 0x1.0p-53;
            if (variate < p)
                result.add_edge(v, w);
        }
    return result;
}

std::pair<Graph, Permutation> permute_by_degree(const Graph & g)
{
    int n = g.size();
    Permutation perm;
    perm.inverse.resize(n);
    perm.forward.resize(n);

    std::vector<int> by_degree(n);
    for (int v = 0 ; v < n ; ++v)
        by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
        [&] (int a, int b) { return g.degree(a) > g.degree(b); });

    for (int i = 0 ; i < n ; ++i) {
        perm.inverse[i] = by_degree[i];
        perm.forward[by_degree[i]] = i;
    }

    Graph permuted{n};
    for (int v = 0 ; v < n ; ++v)
        for (int w : g.neighbourhood(v))
            if (v < w)
                permuted.add_edge(perm.forward[v], perm.forward[w]);

    return {std::move(permuted), std::move(perm)};
}

}
