#include <kclique/power.hh>
#include <kclique/solver.hh>

#include <algorithm>
#include <cassert>
#include <stdexcept>

using std::chrono::steady_clock;

namespace kclique {

ColourOrder colour_order(const Graph & g, const VertexSet & p)
{
    assert(! p.empty());

    ColourOrder result;
    int count = p.count();
    result.order.reserve(count);
    result.bounds.reserve(count);

    VertexSet uncoloured = p;
    int colour = 0;
    while (! uncoloured.empty()) {
        ++colour;
        VertexSet colourable = uncoloured;
        while (! colourable.empty()) {
            int v = colourable.first();
            result.order.push_back(v);
            result.bounds.push_back(colour);
            uncoloured.reset(v);
            colourable.reset(v);
            colourable.and_not(g.neighbourhood(v));
        }
    }

    return result;
}

bool dominated_by(const Graph & g, int v, int w)
{
    if (v == w)
        throw std::invalid_argument{"domination is between distinct vertices"};

    // N(w) - v subset of N(v) - w, as an and-not, a bit unset, and an
    // emptiness test; w never occurs in N(w), so subtracting it from the
    // right-hand side changes nothing.
    VertexSet extra = g.neighbourhood(w);
    extra.and_not(g.neighbourhood(v));
    extra.reset(v);
    return extra.empty();
}

DominationCache::DominationCache(const Graph & g) :
    graph_(g),
    sets_(g.size())
{
}

const VertexSet & DominationCache::dominated_set(int v)
{
    if (! sets_[v]) {
        VertexSet result{graph_.size()};
        for (int w = 0 ; w < graph_.size() ; ++w)
            if (w != v && dominated_by(graph_, v, w))
                result.set(w);
        sets_[v] = std::move(result);
        ++computed_;
    }
    return *sets_[v];
}

namespace {
    constexpr int no_vertex = -1;

    struct Search {
        const Graph & graph;
        const SolverOptions & options;
        DominationCache cache;
        steady_clock::time_point deadline;

        std::vector<int> current;
        std::vector<int> best;
        long long nodes = 0;
        bool aborted = false;

        Search(const Graph & g, const SolverOptions & o, steady_clock::time_point started) :
            graph(g),
            options(o),
            cache(g)
        {
            if (options.time_limit)
                deadline = started + std::chrono::duration_cast<steady_clock::duration>(*options.time_limit);
        }

        bool limit_reached() const
        {
            if (options.node_limit && nodes >= *options.node_limit)
                return true;
            if (options.time_limit && steady_clock::now() >= deadline)
                return true;
            return false;
        }

        void expand(VertexSet & p)
        {
            if (limit_reached()) {
                aborted = true;
                return;
            }
            ++nodes;

            auto [order, bounds] = colour_order(graph, p);
            int v_rej = no_vertex;

            for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                if (int(current.size()) + bounds[i] <= int(best.size()))
                    return;

                // filtering was postponed until after the bound check
                if (options.use_domination && v_rej != no_vertex)
                    p.and_not(cache.dominated_set(v_rej));

                int v = order[i];
                if (p.test(v)) {
                    current.push_back(v);
                    if (current.size() > best.size())
                        best = current;

                    VertexSet remaining = p;
                    remaining &= graph.neighbourhood(v);
                    if (! remaining.empty())
                        expand(remaining);

                    current.pop_back();
                    p.reset(v);
                    if (aborted)
                        return;
                }
                v_rej = v;
            }
        }
    };

    Solution search_graph(const Graph & g, const SolverOptions & options,
        steady_clock::time_point started)
    {
        Solution solution;
        if (g.size() > 0) {
            Search search{g, options, started};
            VertexSet all{g.size()};
            all.fill();
            search.expand(all);

            solution.members = std::move(search.best);
            std::sort(solution.members.begin(), solution.members.end());
            solution.optimal = ! search.aborted;
            solution.stats.nodes = search.nodes;
            solution.stats.domination_sets_computed = search.cache.sets_computed();
        }
        solution.size = int(solution.members.size());
        solution.stats.elapsed = steady_clock::now() - started;
        return solution;
    }
}

Solution solve_max_clique(const Graph & g, const SolverOptions & options)
{
    return search_graph(g, options, steady_clock::now());
}

Solution solve_max_k_clique(const Graph & g, int k, const SolverOptions & options)
{
    if (k < 1)
        throw std::invalid_argument{"k must be at least 1"};

    auto started = steady_clock::now();
    PowerGraph power = power_graph(g, k);
    auto [permuted, permutation] = permute_by_degree(power.graph);

    Solution solution = search_graph(permuted, options, started);

    for (auto & v : solution.members)
        v = permutation.inverse[v];
    std::sort(solution.members.begin(), solution.members.end());
    solution.stats.elapsed = steady_clock::now() - started;
    return solution;
}

}
