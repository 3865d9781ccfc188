#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vmtk/corpus.hpp"
#include "vmtk/errors.hpp"
#include "vmtk/rank.hpp"
#include "vmtk/vm.hpp"

using namespace vmtk;
using testutil::net_graph;

TEST_CASE("local complementation") {
    Graph k3 = complete_graph(3);
    Graph lc = local_complement(k3, 0);
    CHECK(lc.adjacency_equal(Graph(3, {{0, 1}, {0, 2}})));

    Graph star = star_graph(4);
    CHECK(local_complement(star, 0).adjacency_equal(complete_graph(5)));

    Graph iso(4, {{1, 2}, {2, 3}});
    CHECK(local_complement(iso, 0).adjacency_equal(iso));
    CHECK_THROWS_AS(local_complement(iso, 9), DomainError);
}

TEST_CASE("local complementation is an involution") {
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int bit = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        for (int v = 0; v < 5; ++v)
            CHECK(local_complement(local_complement(g, v), v).adjacency_equal(g));
    }
    for (int n = 6; n <= 7; ++n)
        for (const Graph& g : all_graph_classes(n))
            for (int v = 0; v < n; ++v)
                CHECK(local_complement(local_complement(g, v), v).adjacency_equal(g));
    auto rng = make_rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + int(rng() % 11);
        Graph g = random_graph(rng, n, 0.5);
        int v = int(rng() % n);
        CHECK(local_complement(local_complement(g, v), v).adjacency_equal(g));
    }
}

TEST_CASE("pivot on K2 and missing edges") {
    Graph k2 = complete_graph(2);
    Graph p = pivot(k2, 0, 1);
    CHECK(p.adjacency_equal(k2));
    CHECK(p.label(0) == "0"); // labels stay at their slots

    Graph p3 = path_graph(3);
    CHECK_THROWS_AS(pivot(p3, 0, 2), DomainError);
}

TEST_CASE("pivot reproduces the worked 7-vertex example") {
    // a..g as 0..6
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                {2, 5}, {3, 6}, {5, 6}});
    Graph expect(7, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                     {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}});
    CHECK(pivot(g, 0, 1).adjacency_equal(expect));
}

TEST_CASE("pivot equals the three-set description") {
    auto rng = make_rng(41);
    int done = 0;
    while (done < 500) {
        int n = 4 + int(rng() % 9);
        Graph g = random_graph(rng, n, 0.45);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [u, v] = es[rng() % es.size()];
        CHECK(pivot(g, u, v).adjacency_equal(oracle::pivot_direct(g, u, v)));
        CHECK(pivot(g, u, v).adjacency_equal(pivot(g, v, u)));
        ++done;
    }
}

TEST_CASE("pivot composition identity") {
    auto rng = make_rng(43);
    int done = 0;
    while (done < 300) {
        int n = 4 + int(rng() % 8);
        Graph g = random_graph(rng, n, 0.5);
        int v = int(rng() % n);
        auto nb = g.neighbor_list(v);
        if (nb.size() < 2) continue;
        int v1 = nb[rng() % nb.size()], v2 = v1;
        while (v2 == v1) v2 = nb[rng() % nb.size()];
        Graph h = pivot(g, v, v1);
        CHECK(h.has_edge(v1, v2));
        CHECK(pivot(h, v1, v2).adjacency_equal(pivot(g, v, v2)));
        ++done;
    }
}

TEST_CASE("vertex deletion") {
    CHECK(delete_vertex(complete_graph(3), 2).adjacency_equal(complete_graph(2)));
    Graph net = net_graph();
    Graph d = delete_vertex(net, 3);
    CHECK(d.order() == 5);
    CHECK(d.edge_count() == 5);
    CHECK(d.label(3) == "4"); // labels survive deletion
    CHECK(delete_vertex(Graph(1), 0).order() == 0);
}

TEST_CASE("elementary representatives") {
    Graph k2 = complete_graph(2);
    auto reps = elementary_representatives(k2, 0);
    REQUIRE(reps.size() == 3);
    for (const auto& r : reps) CHECK(r.order() == 1);

    Graph iso(3, {{1, 2}});
    CHECK(elementary_representatives(iso, 0).size() == 2);

    for (const auto& r : elementary_representatives(net_graph(), 0)) {
        CHECK(r.order() == 5);
        CHECK(linear_rankwidth_exact(r).width <= 1);
    }
}

TEST_CASE("add_twin") {
    CHECK(add_twin(Graph(1), 0, true).adjacency_equal(complete_graph(2)));
    CHECK(add_twin(complete_graph(2), 0, true).adjacency_equal(complete_graph(3)));
    Graph t = add_twin(net_graph(), 3, false);
    CHECK(t.order() == 7);
    CHECK(is_twin(t, 3, 6));
    CHECK_FALSE(t.has_edge(3, 6));
    Graph t2 = add_twin(net_graph(), 3, true);
    CHECK(is_twin(t2, 3, 6));
    CHECK(t2.has_edge(3, 6));
}

TEST_CASE("local orbits") {
    CHECK(local_orbit(Graph(1)).size() == 1);

    auto k3_orbit = local_orbit(complete_graph(3));
    CHECK(k3_orbit.size() == 2);
    CHECK(k3_orbit.count(canonical_form(path_graph(3))) == 1);
    CHECK(k3_orbit.count(canonical_form(complete_graph(3))) == 1);

    // exhaustive BFS: P4 -> paw -> diamond -> C4, so the 4-cycle belongs
    // to the orbit of the 4-path
    auto p4_orbit = local_orbit(path_graph(4));
    CHECK(p4_orbit.count(canonical_form(cycle_graph(4))) == 1);
    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(p4_orbit.count(canonical_form(paw)) == 1);

    CHECK_THROWS_AS(local_orbit(path_graph(4), 1), ResourceError);
    CHECK_THROWS_AS(local_orbit(Graph(11)), DomainError);
}

TEST_CASE("local orbit preserves order and connectivity") {
    auto rng = make_rng(59);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 3 + int(rng() % 5);
        Graph g = random_connected_graph(rng, n, 0.5);
        for (const auto& form : local_orbit(g)) {
            Graph member = graph_of_canon(form);
            CHECK(member.order() == n);
            CHECK(member.connected());
        }
    }
}

TEST_CASE("small local equivalence") {
    CHECK(locally_equivalent_small(complete_graph(3), path_graph(3)));
    CHECK_FALSE(locally_equivalent_small(path_graph(4), star_graph(3)));
    for (const Graph& t : all_trees(6)) CHECK(locally_equivalent_small(t, t));
    CHECK_THROWS_AS(locally_equivalent_small(path_graph(3), path_graph(4)), DomainError);
}

TEST_CASE("step serialization") {
    auto steps = parse_vm_steps("L 3; P 0 1; D 2");
    REQUIRE(steps.size() == 3);
    CHECK(format_vm_steps(steps) == "L 3 P 0 1 D 2");
    CHECK_THROWS_AS(parse_vm_steps("Q 1"), ParseError);

    Graph g = apply_vm_steps(complete_graph(3), parse_vm_steps("L 0"));
    CHECK(g.adjacency_equal(Graph(3, {{0, 1}, {0, 2}})));
    Graph h = apply_vm_steps(complete_graph(3), parse_vm_steps("D 2 D 1"));
    CHECK(h.order() == 1);
}
