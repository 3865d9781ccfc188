#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vmtk/corpus.hpp"
#include "vmtk/errors.hpp"
#include "vmtk/io.hpp"
#include "vmtk/iso.hpp"

using namespace vmtk;
using testutil::diamond_graph;
using testutil::net_graph;

TEST_CASE("graph basics") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 1), DomainError);
    CHECK_THROWS_AS(g.has_edge(0, 7), DomainError);
    g.toggle_edge(0, 2);
    g.toggle_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(2) == "2");

    Graph h = g.induced({2, 0});
    CHECK(h.order() == 2);
    CHECK(h.has_edge(0, 1));
    CHECK(h.label(0) == "2");
}

TEST_CASE("components and connectivity") {
    Graph g(5, {{0, 1}, {2, 3}});
    auto comps = g.components();
    CHECK(comps.size() == 3);
    CHECK_FALSE(g.connected());
    CHECK(path_graph(4).connected());
    CHECK(Graph(0).connected());
}

TEST_CASE("blocks") {
    // net: the triangle and the three pendant edges
    auto bs = blocks(net_graph());
    REQUIRE(bs.size() == 4);
    std::vector<std::vector<int>> expect{{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}};
    CHECK(bs == expect);

    CHECK(blocks(complete_graph(4)).size() == 1);
    CHECK(blocks(path_graph(3)).size() == 2);
    CHECK(blocks(Graph(2)).size() == 2); // two isolated vertices
}

TEST_CASE("is_block_graph matches the forbidden-subgraph form") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& t : all_trees(n)) CHECK(is_block_graph(t));
    CHECK_FALSE(is_block_graph(diamond_graph()));
    CHECK_FALSE(is_block_graph(cycle_graph(4)));
    CHECK(is_block_graph(complete_graph(4)));

    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : all_graph_classes(n))
            CHECK(is_block_graph(g) == !oracle::has_induced_diamond_or_hole(g));
    auto rng = make_rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 8, 0.35);
        CHECK(is_block_graph(g) == !oracle::has_induced_diamond_or_hole(g));
    }
}

TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(complete_graph(3)) == std::vector<int>{0, 1, 2});
    CHECK(simplicial_vertices(net_graph()) == std::vector<int>{3, 4, 5});
    CHECK(simplicial_vertices(cycle_graph(5)).empty());
}

TEST_CASE("twins") {
    Graph star = star_graph(3);
    CHECK(is_twin(star, 1, 2));
    CHECK(is_twin(diamond_graph(), 2, 3));
    CHECK_FALSE(is_twin(path_graph(4), 1, 2));
    CHECK_THROWS_AS(is_twin(star, 1, 1), DomainError);
}

TEST_CASE("isomorphism on labeled examples") {
    Graph k3 = complete_graph(3);
    Graph k3p(3, {{1, 2}, {0, 2}, {0, 1}});
    CHECK(isomorphic(k3, k3p));
    CHECK_FALSE(isomorphic(path_graph(3), k3));
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
    auto classes4 = all_graph_classes(4);
    for (size_t i = 0; i < classes4.size(); ++i)
        for (size_t j = 0; j < classes4.size(); ++j) {
            bool got = isomorphic(classes4[i], classes4[j]);
            CHECK(got == (i == j));
            CHECK(got == oracle::brute_isomorphic(classes4[i], classes4[j]));
        }
    auto rng = make_rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph a = random_graph(rng, 6, 0.4);
        Graph b = random_graph(rng, 6, 0.4);
        CHECK(isomorphic(a, b) == oracle::brute_isomorphic(a, b));
    }
}

TEST_CASE("isomorphic is an equivalence relation") {
    auto rng = make_rng(5);
    std::vector<Graph> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(random_graph(rng, 6, 0.5));
    for (const auto& a : pool) CHECK(isomorphic(a, a));
    for (const auto& a : pool)
        for (const auto& b : pool) CHECK(isomorphic(a, b) == isomorphic(b, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (isomorphic(a, b) && isomorphic(b, c)) CHECK(isomorphic(a, c));
}

TEST_CASE("rooted isomorphism") {
    Graph k2 = complete_graph(2);
    CHECK(rooted_isomorphic({k2, 0}, {k2, 1}));
    Graph net = net_graph();
    CHECK_FALSE(rooted_isomorphic({net, 0}, {net, 3}));
    CHECK_FALSE(oracle::brute_isomorphic(net, net, {{0, 3}}));
    Graph p3 = path_graph(3);
    CHECK(rooted_isomorphic({p3, 1}, {p3, 1}));
}

TEST_CASE("automorphism orbits") {
    CHECK(automorphism_orbits(cycle_graph(5)).count() == 1);
    CHECK(automorphism_orbits(complete_graph(2), 0).count() == 2);

    auto p = automorphism_orbits(net_graph());
    CHECK(p.count() == 2);
    CHECK(p.classes == oracle::brute_orbits(net_graph()));

    // fixing a vertex refines the partition
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_graph_classes(n)) {
            int base = automorphism_orbits(g).count();
            for (int v = 0; v < n; ++v) CHECK(automorphism_orbits(g, v).count() >= base);
        }

    auto rng = make_rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        CHECK(automorphism_orbits(g).classes == oracle::brute_orbits(g));
        CHECK(automorphism_orbits(g, 2).classes == oracle::brute_orbits(g, 2));
    }
}

TEST_CASE("canonical form separates and identifies classes") {
    auto c5 = cycle_graph(5);
    Graph c5p(5, {{1, 3}, {3, 0}, {0, 2}, {2, 4}, {4, 1}});
    CHECK(canonical_form(c5) == canonical_form(c5p));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
    CHECK(graph_of_canon(canonical_form(net_graph())).order() == 6);
    CHECK(isomorphic(graph_of_canon(canonical_form(net_graph())), net_graph()));
    CHECK_THROWS_AS(canonical_form(Graph(11)), DomainError);
}

TEST_CASE("class enumerations match the known counts") {
    CHECK(all_graph_classes(4).size() == 11);
    CHECK(all_graph_classes(5).size() == 34);
    CHECK(all_graph_classes(6).size() == 156);
    CHECK(all_trees(6).size() == 6);
    CHECK(all_trees(7).size() == 11);
}

TEST_CASE("edge list round trip") {
    Graph g = net_graph();
    std::string text = write_edgelist(g);
    std::istringstream in(text);
    Graph back = read_edgelist(in);
    CHECK(back == g);

    std::istringstream commented("# header\n3 1\n# edge next\n0 2\n");
    Graph c = read_edgelist(commented);
    CHECK(c.order() == 3);
    CHECK(c.has_edge(0, 2));

    std::istringstream bad("3 1\n2 0\n");
    CHECK_THROWS_AS(read_edgelist(bad), ParseError);
    std::istringstream dup("3 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_edgelist(dup), ParseError);
}

TEST_CASE("graph6 round trip and reference encodings") {
    // worked example from the format definition: n=5, edges 02 04 13 34
    Graph g(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(write_graph6(g) == "DQc");
    CHECK(read_graph6("DQc").adjacency_equal(g));
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(read_graph6(">>graph6<<C~").adjacency_equal(complete_graph(4)));

    auto rng = make_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph r = random_graph(rng, 1 + int(rng() % 12), 0.4);
        CHECK(read_graph6(write_graph6(r)).adjacency_equal(r));
    }
    CHECK(read_graph6(write_graph6(Graph(0))).order() == 0);
    CHECK_THROWS_AS(read_graph6("C"), ParseError);
}
