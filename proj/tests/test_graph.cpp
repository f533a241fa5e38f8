#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trifree/construction.hpp"
#include "trifree/error.hpp"
#include "trifree/graph.hpp"

#include <random>
#include <sstream>

using namespace trifree;

TEST_CASE("graph rejects loops, parallel edges and bad endpoints")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK(g.edge_count() == 1);
    CHECK(g.consistent());
}

TEST_CASE("labels are unique")
{
    Graph g;
    g.add_vertex("u");
    CHECK_THROWS_AS(g.add_vertex("u"), std::invalid_argument);
    g.add_vertex("v");
    CHECK(g.find_label("v") == Vertex{1});
    CHECK_FALSE(g.find_label("w"));
}

TEST_CASE("terminal graph requires distinct non-adjacent terminals")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS(TerminalGraph(g, 0, 1));
    CHECK_THROWS(TerminalGraph(g, 2, 2));
    CHECK_NOTHROW(TerminalGraph(g, 0, 2));
}

TEST_CASE("triangle_count")
{
    CHECK(triangle_count(Graph{}) == 0);
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK(triangle_count(k3) == 1);
    CHECK(triangle_count(build_P(5).graph()) == 0);
    CHECK(oracle::naive_triangles(build_P(5).graph()) == 0);
}

TEST_CASE("triangle_count agrees with the triple loop on random graphs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 25;
        const Graph g = oracle::random_graph(rng, n, 0.05 + 0.9 * (trial % 10) / 10.0);
        CHECK(triangle_count(g) == oracle::naive_triangles(g));
    }
}

TEST_CASE("is_proper")
{
    Graph edge(2);
    edge.add_edge(0, 1);
    CHECK(is_proper(edge, Coloring{1, 2}));
    CHECK_FALSE(is_proper(edge, Coloring{1, 1}));

    Coloring partial(2);
    partial.assign(0, 1);
    try {
        (void)is_proper(edge, partial);
        FAIL("partial coloring accepted");
    } catch (const ColoringError& e) {
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
    }

    // u = 3, path 1,2,1,2,1, v = 3
    const Gadget p5 = build_P(5);
    CHECK(is_proper(p5.graph(), Coloring{3, 3, 1, 2, 1, 2, 1}));
    CHECK_THROWS_AS(Coloring({4}), ColoringError);
}

TEST_CASE("is_proper is monotone under edge removal")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> color(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 12;
        const Graph g = oracle::random_graph(rng, n, 0.3);
        Coloring c(n);
        for (Vertex v = 0; v < n; ++v)
            c.assign(v, static_cast<Color>(color(rng)));
        if (!is_proper(g, c) || g.edge_count() == 0)
            continue;
        // drop one edge
        const std::size_t skip = rng() % g.edge_count();
        Graph h(n);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (i != skip)
                h.add_edge(g.edges()[i].a, g.edges()[i].b);
        CHECK(is_proper(h, c));
    }
}

TEST_CASE("induced_subgraph")
{
    const Gadget p5 = build_P(5);
    std::vector<Vertex> all(p5.graph().vertex_count());
    for (Vertex v = 0; v < all.size(); ++v)
        all[v] = v;
    const InducedSubgraph whole = induced_subgraph(p5.graph(), all);
    CHECK(whole.graph.vertex_count() == 7);
    CHECK(whole.graph.edge_count() == 9);
    for (Vertex v = 0; v < all.size(); ++v)
        CHECK(whole.old_to_new[v] == v);

    const InducedSubgraph none = induced_subgraph(p5.graph(), {});
    CHECK(none.graph.vertex_count() == 0);
    CHECK(none.graph.edge_count() == 0);

    const std::vector<Vertex> bad{99};
    CHECK_THROWS_AS(induced_subgraph(p5.graph(), bad), std::invalid_argument);

    const Gadget t11 = build_T(1, 1);
    const InducedSubgraph inner = induced_subgraph(t11.graph(), t11.registry.inner_set);
    CHECK(inner.graph.vertex_count() == 7);
    CHECK(inner.graph.edge_count() == 9);
}

TEST_CASE("graph6 encoding")
{
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK(to_graph6(k3) == "Bw");

    Graph k4(4);
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            k4.add_edge(a, b);
    CHECK(to_graph6(k4) == "C~");

    // Reference strings produced by networkx.to_graph6_bytes.
    CHECK(to_graph6(build_T(1, 1).graph()) == "LRdKH?HC?G`??`");
    Graph path70(70);
    for (Vertex i = 0; i + 1 < 70; ++i)
        path70.add_edge(i, i + 1);
    CHECK(to_graph6(path70).substr(0, 12) == "~?@EhCGGC@?G");
}

TEST_CASE("dot export keeps labels")
{
    std::ostringstream out;
    write_dot(out, build_T(1, 0).graph());
    const std::string dot = out.str();
    for (const char* label : {"\"u\"", "\"v\"", "\"v1\"", "\"v2\""})
        CHECK(dot.find(label) != std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
}
