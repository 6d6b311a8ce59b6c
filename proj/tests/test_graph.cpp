#include <stdexcept>
#include <random>

#include "doctest.h"
#include "eqaoa/graph.hpp"

using namespace eqaoa;

TEST_SUITE_BEGIN("graph");

TEST_CASE("builtin graphs match the published figures") {
    Graph g1 = builtin_graph("gamma1");
    CHECK(g1.num_vertices() == 5);
    CHECK(g1.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {3, 4}});

    Graph fg = builtin_graph("frakG");
    CHECK(fg.num_vertices() == 4);
    CHECK(fg.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    Graph g6 = builtin_graph("gamma6");
    CHECK(g6.num_vertices() == 9);
    CHECK(g6.num_edges() == 8);
    for (const Edge& e : g6.edges()) CHECK(e.u == 0);  // hub and spokes

    CHECK_THROWS_WITH_AS(builtin_graph("gamma9"),
                         doctest::Contains("valid names"), std::invalid_argument);
}

TEST_CASE("edge counts of the remaining fixtures") {
    CHECK(builtin_graph("gamma2").num_edges() == 8);
    CHECK(builtin_graph("gamma3").num_edges() == 8);
    CHECK(builtin_graph("gamma4").num_edges() == 8);
    CHECK(builtin_graph("gamma5").num_edges() == 8);
}

TEST_CASE("parse_edge_list basics") {
    Graph path = parse_edge_list("0 1\n1 2");
    CHECK(path.num_vertices() == 3);
    CHECK(path.num_edges() == 2);

    Graph declared = parse_edge_list("n 5\n0 1");
    CHECK(declared.num_vertices() == 5);
    CHECK(declared.num_edges() == 1);

    CHECK_THROWS_WITH_AS(parse_edge_list("0 0"), doctest::Contains("self-loop"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 -2"), doctest::Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\nbogus"), doctest::Contains("line 2"),
                         std::invalid_argument);

    // Repeated pairs normalize away; reversed orientation is the same edge.
    Graph dedup = parse_edge_list("0 1\n1 0\n0 1");
    CHECK(dedup.num_edges() == 1);
}

TEST_CASE("round trip through the text form") {
    for (const std::string& name : builtin_graph_names()) {
        Graph g = builtin_graph(name);
        CHECK(parse_edge_list(g.to_edge_list()) == g);
    }
}

TEST_CASE("adjacent edge pairs on the fixtures") {
    // Independent oracle: count via the degree identity sum_v C(deg v, 2).
    auto pair_count_by_degrees = [](const Graph& g) {
        long total = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            long deg = g.degree(v);
            total += deg * (deg - 1) / 2;
        }
        return total;
    };

    Graph g1 = builtin_graph("gamma1");
    CHECK(adjacent_edge_pairs(g1).size() == 11);
    CHECK(pair_count_by_degrees(g1) == 11);

    Graph two_path = parse_edge_list("0 1\n1 2");
    CHECK(adjacent_edge_pairs(two_path).size() == 1);

    Graph edgeless(3, {});
    CHECK(adjacent_edge_pairs(edgeless).empty());
}

TEST_CASE("pair count equals the degree identity on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        long by_degree = 0;
        for (int v = 0; v < n; ++v) {
            long deg = g.degree(v);
            by_degree += deg * (deg - 1) / 2;
        }
        CHECK(static_cast<long>(adjacent_edge_pairs(g).size()) == by_degree);
    }
}

TEST_CASE("max degree") {
    CHECK(builtin_graph("gamma1").max_degree() == 4);
    CHECK(builtin_graph("gamma6").max_degree() == 8);
    CHECK(Graph(2, {{0, 1}}).max_degree() == 1);
}

TEST_CASE("graph invariants rejected at construction") {
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // parallel edge
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
}

TEST_SUITE_END();
