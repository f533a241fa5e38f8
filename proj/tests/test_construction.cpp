#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trifree/construction.hpp"
#include "trifree/error.hpp"

#include <algorithm>

using namespace trifree;

TEST_CASE("build_P small cases")
{
    const Gadget p1 = build_P(1);
    CHECK(p1.graph().vertex_count() == 3);
    CHECK(p1.graph().edge_count() == 1);
    CHECK(p1.graph().has_edge(frame::u, frame::path(1)));
    CHECK(p1.graph().degree(frame::v) == 0);

    const Gadget p5 = build_P(5);
    CHECK(p5.graph().vertex_count() == 7);
    CHECK(p5.graph().edge_count() == 9);
    for (unsigned i = 1; i <= 5; ++i) {
        CHECK(p5.graph().has_edge(i % 2 ? frame::u : frame::v, frame::path(i)));
        CHECK_FALSE(p5.graph().has_edge(i % 2 ? frame::v : frame::u, frame::path(i)));
    }
    CHECK_FALSE(p5.graph().has_edge(frame::u, frame::v));

    for (unsigned k = 1; k <= 8; ++k)
        CHECK(build_P(std::uint64_t{1} << k).graph().vertex_count() == (1u << k) + 2);

    CHECK_THROWS_AS(build_P(0), DomainError);
}

TEST_CASE("build_T base and first level")
{
    const Gadget t10 = build_T(1, 0);
    CHECK(t10.graph().vertex_count() == 4);
    REQUIRE(t10.registry.pairs.size() == 1);
    CHECK(t10.registry.pairs[0] == VertexPair{frame::u, frame::v});
    CHECK(t10.registry.inner_set == std::vector<Vertex>{frame::u, frame::v});
    CHECK_FALSE(t10.sub_terminal_map);

    const Gadget t11 = build_T(1, 1);
    CHECK(t11.graph().vertex_count() == 13);
    CHECK(t11.registry.pairs.size() == 3);
    CHECK(t11.registry.inner_set.size() == 7);
    REQUIRE(t11.sub_terminal_map);
    CHECK((*t11.sub_terminal_map)[0] == VertexPair{frame::path(1), frame::path(3)});
    CHECK((*t11.sub_terminal_map)[1] == VertexPair{frame::path(2), frame::path(4)});
    CHECK((*t11.sub_terminal_map)[2] == VertexPair{frame::path(3), frame::path(5)});
    CHECK(t11.registry.pairs == std::vector<VertexPair>(t11.sub_terminal_map->begin(), t11.sub_terminal_map->end()));

    CHECK_THROWS_AS(build_T(0, 1), DomainError);
    CHECK_THROWS_AS(build_T(6, 8, 1000), DomainError);
}

TEST_CASE("labels follow the recursion path")
{
    const Gadget t = build_T(1, 2);
    CHECK(t.graph().label(0) == "u");
    CHECK(t.graph().label(frame::path(5)) == "v5");
    REQUIRE(t.graph().find_label("T0.P2.v2"));
    REQUIRE(t.graph().find_label("T2.v5"));
    const Gadget deep = build_T(3, 2);
    REQUIRE(deep.graph().find_label("T0.P2.v5"));
}

TEST_CASE("edge sets equal an independent transcription of the definition")
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned ell = 0; ell <= 4; ++ell) {
            std::size_t n = 0;
            const auto expected = oracle::reference_T_edges(k, ell, n);
            const Gadget t = build_T(k, ell);
            CAPTURE(k);
            CAPTURE(ell);
            CHECK(t.graph().vertex_count() == n);
            CHECK(oracle::edge_set(t.graph()) == expected);
        }
}

TEST_CASE("structural invariants over k <= 5, ell <= 5")
{
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned ell = 0; ell <= 5; ++ell) {
            const Gadget t = build_T(k, ell);
            const Graph& g = t.graph();
            CAPTURE(k);
            CAPTURE(ell);
            CHECK(triangle_count(g) == 0);
            CHECK(BigInt(static_cast<unsigned long>(g.vertex_count())) == vertex_count_closed_form(k, ell));
            CHECK(vertex_count_closed_form(k, ell) >= vertex_lower_bound(k, ell));
            CHECK(BigInt(static_cast<unsigned long>(t.registry.inner_set.size())) == inner_set_size(ell));
            CHECK(t.registry.pairs.size() == to_u64(pow_ui(3, ell)));
            CHECK(t.registry.leaf_b == (std::uint64_t{1} << k));

            // leaf interiors: disjoint from each other and from V_ell, and
            // together with V_ell they cover the graph
            std::vector<int> owner(g.vertex_count(), -1);
            for (Vertex v : t.registry.inner_set)
                owner[v] = 0;
            bool disjoint = true;
            for (const auto& range : t.registry.leaf_interiors) {
                CHECK(range.count == t.registry.leaf_b);
                for (Vertex v = range.first; v < range.first + range.count; ++v) {
                    disjoint = disjoint && owner[v] == -1;
                    owner[v] = 1;
                }
            }
            CHECK(disjoint);
            CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
            for (std::size_t i = 0; i < t.registry.pairs.size(); ++i) {
                const auto [x, y] = t.registry.pairs[i];
                CHECK(std::binary_search(t.registry.inner_set.begin(), t.registry.inner_set.end(), x));
                CHECK(std::binary_search(t.registry.inner_set.begin(), t.registry.inner_set.end(), y));
                CHECK_FALSE(g.has_edge(x, y));
            }
            CHECK(t.outer_face().contains(t.tg.u()));
            CHECK(t.outer_face().contains(t.tg.v()));
        }
}

TEST_CASE("V_1 of T(k,1) induces P(u,v,5) with terminals in place")
{
    const auto p5 = oracle::edge_set(build_P(5).graph());
    for (unsigned k = 1; k <= 4; ++k) {
        const Gadget t = build_T(k, 1);
        const InducedSubgraph sub = induced_subgraph(t.graph(), t.registry.inner_set);
        // canonical numbering puts the frame at 0..6, so the mapping is the identity
        CHECK(sub.new_to_old == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
        CHECK(oracle::edge_set(sub.graph) == p5);
    }
}

TEST_CASE("closed forms")
{
    CHECK(vertex_count_closed_form(1, 0) == 4);
    CHECK(vertex_count_closed_form(1, 1) == 13);
    // t_l = 3 t_{l-1} + 1
    for (unsigned k = 1; k <= 8; ++k) {
        BigInt t = pow2(k) + 2;
        for (unsigned ell = 0; ell <= 20; ++ell) {
            CHECK(vertex_count_closed_form(k, ell) == t);
            CHECK(t >= vertex_lower_bound(k, ell));
            t = 3 * t + 1;
        }
    }

    CHECK(inner_set_size(0) == 2);
    CHECK(inner_set_size(1) == 7);
    CHECK(inner_set_size(2) == 22);
    BigInt v = 2;
    for (unsigned ell = 0; ell <= 40; ++ell) {
        CHECK(inner_set_size(ell) == v);
        CHECK(2 * inner_set_size(ell) < 5 * pow_ui(3, ell));
        v = 3 * v + 1;
    }
}

TEST_CASE("choose_k")
{
    CHECK(choose_k(0) == 1);
    CHECK(choose_k(1) == 1);
    CHECK(choose_k(5) == 3);
    for (unsigned ell = 1; ell <= 64; ++ell) {
        const unsigned k = choose_k(ell);
        const BigInt p3 = pow_ui(3, ell);
        CAPTURE(ell);
        CHECK(p3 <= pow2(k + ell));
        CHECK(pow2(k + ell) <= 2 * p3);
        // smallest such k
        if (k > 1)
            CHECK(pow2(k - 1 + ell) < p3);
    }
}
