#ifndef KCLIQUE_HARNESS_HH
#define KCLIQUE_HARNESS_HH

#include <kclique/io.hh>
#include <kclique/solver.hh>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kclique {

/// One solve, reported the way the experiment tables are laid out: the
/// density of G^k, the solution size, the node count, and the runtime.
struct RunRecord {
    std::string instance;
    int k = 1;
    double power_density = 0.0;
    int size = 0;
    long long nodes = 0;
    double seconds = 0.0;
    bool optimal = true;
    bool domination = true;
    std::vector<std::uint64_t> members;   // original labels, ascending
};

/// Solves instance for the given k and cross-checks the result with the
/// k-clique verifier before reporting; throws on a verifier failure.
RunRecord run_solve(const Instance & instance, const std::string & name,
    int k, const SolverOptions & options);

/// Tab-separated record line, members appended as a space-separated list.
void print_run_record(std::ostream & out, const RunRecord & record);

struct SweepParams {
    int n = 0;
    int k = 1;
    double p_min = 0.0;
    double p_max = 0.0;
    double p_step = 0.1;
    int samples = 1;
    std::uint64_t seed = 0;
    SolverOptions options = {.use_domination = false};
};

struct SweepRecord {
    int n;
    double p;
    int k;
    int samples;
    double mean_size;
    double mean_nodes;
    std::uint64_t seed;
};

/// For each p in the grid, solves `samples` G(n, p) instances seeded
/// seed, seed+1, ... and averages size and node count.
std::vector<SweepRecord> run_sweep(const SweepParams & params);

/// CSV with header n,p,k,samples,mean_size,mean_nodes,seed.
void write_sweep_csv(std::ostream & out, const std::vector<SweepRecord> & records);

}

#endif
