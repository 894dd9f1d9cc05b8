#include <kclique/harness.hh>
#include <kclique/oracle.hh>
#include <kclique/power.hh>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace kclique {

namespace {
    std::string format_double(const char * spec, double value)
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), spec, value);
        return buffer;
    }
}

RunRecord run_solve(const Instance & instance, const std::string & name,
    int k, const SolverOptions & options)
{
    Solution solution = solve_max_k_clique(instance.graph, k, options);

    if (! verify_k_clique(instance.graph, k, solution.members))
        throw std::runtime_error{"internal error: solution failed the k-clique self-check"};

    RunRecord record;
    record.instance = name;
    record.k = k;
    record.power_density = density(power_graph(instance.graph, k).graph);
    record.size = solution.size;
    record.nodes = solution.stats.nodes;
    record.seconds = solution.stats.elapsed.count();
    record.optimal = solution.optimal;
    record.domination = options.use_domination;
    for (int v : solution.members)
        record.members.push_back(instance.labels[v]);
    return record;
}

void print_run_record(std::ostream & out, const RunRecord & record)
{
    out << record.instance
        << '\t' << record.k
        << '\t' << format_double("%.6f", record.power_density)
        << '\t' << record.size
        << '\t' << record.nodes
        << '\t' << format_double("%.6f", record.seconds)
        << '\t' << (record.optimal ? 1 : 0)
        << '\t' << (record.domination ? 1 : 0)
        << '\t';
    for (std::size_t i = 0 ; i < record.members.size() ; ++i)
        out << (i == 0 ? "" : " ") << record.members[i];
    out << '\n';
}

std::vector<SweepRecord> run_sweep(const SweepParams & params)
{
    if (params.n < 0 || params.samples < 1 || params.p_step <= 0.0
            || params.p_min < 0.0 || params.p_max > 1.0 || params.p_min > params.p_max)
        throw std::invalid_argument{"bad sweep grid"};

    std::vector<SweepRecord> records;
    double epsilon = params.p_step * 1e-9;
    for (int i = 0 ; ; ++i) {
        double p = params.p_min + i * params.p_step;
        if (p > params.p_max + epsilon)
            break;

        double total_size = 0.0, total_nodes = 0.0;
        for (int s = 0 ; s < params.samples ; ++s) {
            Graph g = generate_gnp(params.n, p, params.seed + std::uint64_t(s));
            Solution solution = solve_max_k_clique(g, params.k, params.options);
            total_size += solution.size;
            total_nodes += double(solution.stats.nodes);
        }

        records.push_back(SweepRecord{params.n, p, params.k, params.samples,
            total_size / params.samples, total_nodes / params.samples, params.seed});
    }
    return records;
}

void write_sweep_csv(std::ostream & out, const std::vector<SweepRecord> & records)
{
    out << "n,p,k,samples,mean_size,mean_nodes,seed\n";
    for (const auto & r : records)
        out << r.n
            << ',' << format_double("%g", r.p)
            << ',' << r.k
            << ',' << r.samples
            << ',' << format_double("%g", r.mean_size)
            << ',' << format_double("%g", r.mean_nodes)
            << ',' << r.seed << '\n';
}

}
