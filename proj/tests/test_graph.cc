#include <kclique/graph.hh>
#include <kclique/io.hh>

#include "test_helpers.hh"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace kclique;
using namespace kclique::test;

TEST_CASE("graph construction keeps symmetry and drops loops")
{
    Graph g{4};
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(2, 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(! g.adjacent(2, 2));
}

TEST_CASE("dimacs parsing")
{
    SUBCASE("triangle") {
        std::istringstream in{"p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"};
        auto instance = parse_dimacs(in);
        CHECK(instance.graph.size() == 3);
        CHECK(instance.graph.edge_count() == 3);
        CHECK(instance.labels == std::vector<std::uint64_t>{1, 2, 3});
    }

    SUBCASE("sample instance") {
        std::istringstream in{sample8_dimacs()};
        auto instance = parse_dimacs(in);
        CHECK(instance.graph.size() == 8);
        CHECK(instance.graph.edge_count() == 12);
        CHECK(instance.graph == sample8());
    }

    SUBCASE("edgeless") {
        std::istringstream in{"p edge 2 0\n"};
        auto instance = parse_dimacs(in);
        CHECK(instance.graph.size() == 2);
        CHECK(instance.graph.edge_count() == 0);
    }

    SUBCASE("duplicates and loops") {
        std::istringstream in{"p edge 3 3\ne 1 2\ne 2 1\ne 3 3\n"};
        auto instance = parse_dimacs(in);
        CHECK(instance.graph.edge_count() == 1);
    }

    SUBCASE("errors name the line") {
        auto line_of = [] (const std::string & text) {
            std::istringstream in{text};
            try {
                parse_dimacs(in);
            }
            catch (const ParseError & e) {
                return e.line();
            }
            return -1;
        };

        CHECK(line_of("p edge 2 1\ne 1 3\n") == 2);          // endpoint out of range
        CHECK(line_of("e 1 2\np edge 2 1\n") == 1);          // edge before p
        CHECK(line_of("c nothing else\n") == 1);             // missing p line
        CHECK(line_of("p edge 2 1\nq 1 2\n") == 2);          // unknown line type
        CHECK(line_of("p edge two 1\n") == 1);               // malformed p
        CHECK(line_of("p edge 3 2\ne 1\n") == 2);            // malformed e
    }
}

TEST_CASE("edge list parsing")
{
    SUBCASE("path of three") {
        std::istringstream in{"0 1\n1 2\n"};
        auto instance = parse_edge_list(in);
        CHECK(instance.graph.size() == 3);
        CHECK(instance.graph.edge_count() == 2);
        CHECK(instance.labels == std::vector<std::uint64_t>{0, 1, 2});
    }

    SUBCASE("loop registers the vertex only") {
        std::istringstream in{"7 7\n"};
        auto instance = parse_edge_list(in);
        CHECK(instance.graph.size() == 1);
        CHECK(instance.graph.edge_count() == 0);
        CHECK(instance.labels == std::vector<std::uint64_t>{7});
    }

    SUBCASE("duplicate edge collapses") {
        std::istringstream in{"5 9\n9 5\n"};
        auto instance = parse_edge_list(in);
        CHECK(instance.graph.size() == 2);
        CHECK(instance.graph.edge_count() == 1);
        CHECK(instance.labels == std::vector<std::uint64_t>{5, 9});
    }

    SUBCASE("comments and labels in first-appearance order") {
        std::istringstream in{"# a comment\n30 10\n10 20\n"};
        auto instance = parse_edge_list(in);
        CHECK(instance.labels == std::vector<std::uint64_t>{30, 10, 20});
        CHECK(instance.vertex_for_label(20) == 2);
        CHECK(! instance.vertex_for_label(99));
    }

    SUBCASE("bad tokens name the line") {
        std::istringstream in{"1 2\n3 x\n"};
        CHECK_THROWS_WITH_AS(parse_edge_list(in),
            doctest::Contains("line 2"), ParseError);

        std::istringstream three{"1 2 3\n"};
        CHECK_THROWS_AS(parse_edge_list(three), ParseError);
    }
}

TEST_CASE("serialisation round-trips bit-exactly")
{
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        Instance instance;
        instance.graph = generate_gnp(17, 0.3, seed);
        for (int v = 0 ; v < 17 ; ++v)
            instance.labels.push_back(std::uint64_t(v) + 1);

        std::ostringstream dimacs;
        write_dimacs(instance.graph, dimacs);
        std::istringstream dimacs_in{dimacs.str()};
        CHECK(parse_dimacs(dimacs_in) == instance);

        // scramble the labels so appearance order actually matters
        for (int v = 0 ; v < 17 ; ++v)
            instance.labels[v] = (instance.labels[v] * 7919) % 101;
        std::ostringstream edges;
        write_edge_list(instance, edges);
        std::istringstream edges_in{edges.str()};
        CHECK(parse_edge_list(edges_in) == instance);
    }
}

TEST_CASE("edge list round-trip keeps isolated vertices")
{
    Instance instance;
    instance.graph = graph_from_edges(3, {{1, 2}});
    instance.labels = {50, 60, 70};

    std::ostringstream out;
    write_edge_list(instance, out);
    std::istringstream in{out.str()};
    CHECK(parse_edge_list(in) == instance);
}

TEST_CASE("gnp generator")
{
    SUBCASE("extreme probabilities") {
        CHECK(generate_gnp(10, 0.0, 123).edge_count() == 0);
        CHECK(generate_gnp(10, 1.0, 123).edge_count() == 45);
    }

    SUBCASE("pure in n, p, seed") {
        CHECK(generate_gnp(40, 0.5, 7) == generate_gnp(40, 0.5, 7));
        CHECK(generate_gnp(40, 0.5, 7) != generate_gnp(40, 0.5, 8));
    }

    SUBCASE("mean density tracks p") {
        double total = 0.0;
        for (std::uint64_t seed = 0 ; seed < 100 ; ++seed)
            total += density(generate_gnp(200, 0.10, seed));
        CHECK(std::abs(total / 100.0 - 0.10) < 0.01);
    }

    SUBCASE("rejects bad probabilities") {
        CHECK_THROWS_AS(generate_gnp(5, -0.1, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_gnp(5, 1.1, 0), std::invalid_argument);
    }
}

TEST_CASE("density")
{
    CHECK(density(complete(3)) == 1.0);
    CHECK(density(sample8()) == doctest::Approx(12.0 / 28.0));
    CHECK(density(generate_gnp(10, 0.0, 0)) == 0.0);
    CHECK(density(Graph{1}) == 0.0);
    CHECK(density(Graph{0}) == 0.0);
}

TEST_CASE("degree permutation")
{
    SUBCASE("star centre moves to the front") {
        auto [g, perm] = permute_by_degree(star(3, 4));
        CHECK(perm.inverse[0] == 3);
        CHECK(g.degree(0) == 3);
    }

    SUBCASE("regular graphs keep the identity") {
        auto [g, perm] = permute_by_degree(cycle(5));
        for (int v = 0 ; v < 5 ; ++v)
            CHECK(perm.forward[v] == v);
        CHECK(g == cycle(5));
    }

    SUBCASE("sample instance leads with its two degree-5 vertices") {
        auto [g, perm] = permute_by_degree(sample8());
        CHECK(perm.inverse[0] == 1);
        CHECK(perm.inverse[1] == 4);
        CHECK(g.degree(0) == 5);
    }

    SUBCASE("permutation is a degree-sorted isomorphism") {
        for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
            Graph g = generate_gnp(30, 0.4, seed);
            auto [h, perm] = permute_by_degree(g);

            for (int i = 0 ; i + 1 < 30 ; ++i)
                CHECK(h.degree(i) >= h.degree(i + 1));
            for (int v = 0 ; v < 30 ; ++v)
                CHECK(perm.inverse[perm.forward[v]] == v);
            for (int v = 0 ; v < 30 ; ++v)
                for (int w = 0 ; w < 30 ; ++w)
                    if (v != w)
                        CHECK(g.adjacent(v, w) == h.adjacent(perm.forward[v], perm.forward[w]));
        }
    }
}
