#include <kclique/oracle.hh>

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace kclique {

DistanceMatrix::DistanceMatrix(int n) :
    n_(n),
    distances_(std::size_t(n) * n, n)
{
    for (int v = 0 ; v < n ; ++v)
        at(v, v) = 0;
}

DistanceMatrix all_pairs_distances(const Graph & g)
{
    int n = g.size();
    DistanceMatrix result{n};

    for (int source = 0 ; source < n ; ++source) {
        std::queue<int> queue;
        queue.push(source);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbourhood(v))
                if (w != source && result.at(source, w) == result.unreachable()) {
                    result.at(source, w) = result.at(source, v) + 1;
                    queue.push(w);
                }
        }
    }

    return result;
}

namespace {
    struct Enumeration {
        const Graph & graph;
        std::vector<int> current;
        std::vector<int> best;
        long long calls = 0;

        explicit Enumeration(const Graph & g) : graph(g) { }

        void extend(const VertexSet & candidates)
        {
            ++calls;
            VertexSet rest = candidates;
            while (! rest.empty()) {
                if (int(current.size()) + rest.count() <= int(best.size()))
                    return;
                int v = rest.first();
                rest.reset(v);
                current.push_back(v);
                if (current.size() > best.size())
                    best = current;
                VertexSet next = rest;
                next &= graph.neighbourhood(v);
                if (! next.empty())
                    extend(next);
                current.pop_back();
            }
        }
    };
}

Solution brute_force_max_clique(const Graph & g)
{
    if (g.size() > 32)
        throw std::invalid_argument{"brute-force oracle refuses graphs with more than 32 vertices"};

    Solution solution;
    if (g.size() > 0) {
        Enumeration enumeration{g};
        VertexSet all{g.size()};
        all.fill();
        enumeration.extend(all);
        solution.members = std::move(enumeration.best);
        std::sort(solution.members.begin(), solution.members.end());
        solution.stats.nodes = enumeration.calls;
    }
    solution.size = int(solution.members.size());
    return solution;
}

bool verify_clique(const Graph & g, const std::vector<int> & members)
{
    for (std::size_t i = 0 ; i < members.size() ; ++i)
        for (std::size_t j = i + 1 ; j < members.size() ; ++j)
            if (members[i] != members[j] && ! g.adjacent(members[i], members[j]))
                return false;
    return true;
}

bool verify_k_clique(const Graph & g, int k, const std::vector<int> & members)
{
    auto distances = all_pairs_distances(g);
    for (std::size_t i = 0 ; i < members.size() ; ++i)
        for (std::size_t j = i + 1 ; j < members.size() ; ++j) {
            // the sentinel means infinity, so it fails for every k, even
            // k larger than the sentinel's numeric value
            int d = distances.at(members[i], members[j]);
            if (d == distances.unreachable() || d > k)
                return false;
        }
    return true;
}

bool verify_k_club(const Graph & g, int k, const std::vector<int> & members)
{
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Graph induced{int(sorted.size())};
    for (std::size_t i = 0 ; i < sorted.size() ; ++i)
        for (std::size_t j = i + 1 ; j < sorted.size() ; ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                induced.add_edge(int(i), int(j));

    auto distances = all_pairs_distances(induced);
    for (int i = 0 ; i < induced.size() ; ++i)
        for (int j = i + 1 ; j < induced.size() ; ++j) {
            int d = distances.at(i, j);
            if (d == distances.unreachable() || d > k)
                return false;
        }
    return true;
}

}
