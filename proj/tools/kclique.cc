#include <kclique/harness.hh>
#include <kclique/io.hh>
#include <kclique/oracle.hh>
#include <kclique/power.hh>
#include <kclique/solver.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {
    constexpr int exit_ok = 0;
    constexpr int exit_error = 1;
    constexpr int exit_aborted = 2;

    kclique::FileFormat parse_format(const std::string & name)
    {
        return "edges" == name ? kclique::FileFormat::edge_list : kclique::FileFormat::dimacs;
    }

    std::ofstream open_output(const std::string & path)
    {
        std::ofstream out{path};
        if (! out)
            throw std::runtime_error{"cannot write '" + path + "'"};
        return out;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact maximum clique and maximum k-clique solver"};
    app.require_subcommand(1);

    std::string file, format = "dimacs", out_path, mode, solution_file;
    int k = 1, n = 0, samples = 100;
    double p_min = 0.0, p_max = 1.0, p_step = 0.05, time_limit = 0.0;
    long long node_limit = 0;
    std::uint64_t seed = 0;
    bool no_domination = false, domination = false;

    auto add_format = [&] (CLI::App * cmd) {
        cmd->add_option("--format", format, "Instance file format")
            ->check(CLI::IsMember({"dimacs", "edges"}));
    };

    auto * solve = app.add_subcommand("solve", "Solve one instance and print a run record");
    solve->add_option("file", file, "Instance file")->required();
    add_format(solve);
    solve->add_option("--k", k, "Distance bound (1 = plain maximum clique)")
        ->check(CLI::PositiveNumber);
    solve->add_flag("--no-domination", no_domination, "Disable the lazy domination rule");
    solve->add_option("--node-limit", node_limit, "Abort after this many search nodes")
        ->check(CLI::PositiveNumber);
    solve->add_option("--time-limit", time_limit, "Abort after this many seconds")
        ->check(CLI::PositiveNumber);

    auto * sweep = app.add_subcommand("sweep", "Random-graph sweep over an edge-probability grid");
    sweep->add_option("--n", n, "Vertices per sampled graph")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--k", k, "Distance bound")->check(CLI::PositiveNumber);
    sweep->add_option("--p-min", p_min, "Grid start")->required();
    sweep->add_option("--p-max", p_max, "Grid end (inclusive)")->required();
    sweep->add_option("--p-step", p_step, "Grid step")->required();
    sweep->add_option("--samples", samples, "Samples per grid point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "Base seed; sample s uses seed + s");
    sweep->add_flag("--domination", domination, "Enable the domination rule (off by default here)");
    sweep->add_option("--out", out_path, "Write CSV here instead of stdout");

    auto * power = app.add_subcommand("power", "Write the k-th graph power in DIMACS format");
    power->add_option("file", file, "Instance file")->required();
    add_format(power);
    power->add_option("--k", k, "Power to apply")->check(CLI::PositiveNumber);
    power->add_option("--out", out_path, "Output file instead of stdout");

    auto * verify = app.add_subcommand("verify", "Check a vertex set against an instance");
    verify->add_option("file", file, "Instance file")->required();
    add_format(verify);
    verify->add_option("solution", solution_file, "File listing vertex labels")->required();
    verify->add_option("--mode", mode, "What to check")->required()
        ->check(CLI::IsMember({"clique", "kclique", "kclub"}));
    verify->add_option("--k", k, "Distance bound for kclique / kclub modes")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            kclique::SolverOptions options;
            options.use_domination = ! no_domination;
            if (node_limit > 0)
                options.node_limit = node_limit;
            if (time_limit > 0)
                options.time_limit = std::chrono::duration<double>{time_limit};

            auto instance = kclique::read_instance(file, parse_format(format));
            auto record = kclique::run_solve(instance, file, k, options);
            kclique::print_run_record(std::cout, record);
            return record.optimal ? exit_ok : exit_aborted;
        }
        else if (sweep->parsed()) {
            kclique::SweepParams params;
            params.n = n;
            params.k = k;
            params.p_min = p_min;
            params.p_max = p_max;
            params.p_step = p_step;
            params.samples = samples;
            params.seed = seed;
            params.options.use_domination = domination;

            auto records = kclique::run_sweep(params);
            if (out_path.empty())
                kclique::write_sweep_csv(std::cout, records);
            else {
                auto out = open_output(out_path);
                kclique::write_sweep_csv(out, records);
            }
            return exit_ok;
        }
        else if (power->parsed()) {
            auto instance = kclique::read_instance(file, parse_format(format));
            auto result = kclique::power_graph(instance.graph, k);
            if (out_path.empty())
                kclique::write_dimacs(result.graph, std::cout);
            else {
                auto out = open_output(out_path);
                kclique::write_dimacs(result.graph, out);
            }
            return exit_ok;
        }
        else if (verify->parsed()) {
            auto instance = kclique::read_instance(file, parse_format(format));

            std::ifstream in{solution_file};
            if (! in)
                throw std::runtime_error{"cannot open '" + solution_file + "'"};
            std::vector<int> members;
            std::uint64_t label;
            while (in >> label) {
                auto v = instance.vertex_for_label(label);
                if (! v)
                    throw std::runtime_error{"label " + std::to_string(label)
                        + " is not a vertex of '" + file + "'"};
                members.push_back(*v);
            }

            bool ok;
            if ("clique" == mode)
                ok = kclique::verify_clique(instance.graph, members);
            else if ("kclique" == mode)
                ok = kclique::verify_k_clique(instance.graph, k, members);
            else
                ok = kclique::verify_k_club(instance.graph, k, members);

            std::cout << (ok ? "PASS" : "FAIL") << '\n';
            return ok ? exit_ok : exit_error;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "kclique: " << e.what() << '\n';
        return exit_error;
    }

    return exit_error;
}
