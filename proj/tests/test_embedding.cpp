#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trifree/construction.hpp"
#include "trifree/embedding.hpp"
#include "trifree/error.hpp"

#include <algorithm>

using namespace trifree;

namespace {

std::vector<std::size_t> sorted_lengths(const std::vector<Face>& faces)
{
    std::vector<std::size_t> out;
    for (const auto& f : faces)
        out.push_back(f.length());
    std::sort(out.begin(), out.end());
    return out;
}

/// Cyclic-rotation-insensitive comparison of a walk with an expected one.
bool same_cycle(std::vector<Vertex> walk, const std::vector<Vertex>& expected)
{
    for (std::size_t r = 0; r < walk.size(); ++r) {
        if (walk == expected)
            return true;
        std::rotate(walk.begin(), walk.begin() + 1, walk.end());
    }
    return false;
}

}  // namespace

TEST_CASE("4-cycle has an inside and an outside")
{
    Graph c4(4);
    for (Vertex i = 0; i < 4; ++i)
        c4.add_edge(i, (i + 1) % 4);
    RotationSystem rot{{{1, 3}, {2, 0}, {3, 1}, {0, 2}}, std::nullopt};
    const auto faces = trace_faces(c4, rot);
    CHECK(sorted_lengths(faces) == std::vector<std::size_t>{4, 4});
    CHECK(euler_check(c4, faces));
    CHECK(min_bounded_face_length(faces, 0) == std::optional<std::size_t>(4));
}

TEST_CASE("single edge")
{
    Graph g(2);
    g.add_edge(0, 1);
    RotationSystem rot{{{1}, {0}}, std::nullopt};
    const auto faces = trace_faces(g, rot);
    CHECK(faces.size() == 1);
    CHECK(euler_check(g, faces));
    CHECK_FALSE(min_bounded_face_length(faces, 0));
}

TEST_CASE("inconsistent rotation is rejected")
{
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK_THROWS_AS(trace_faces(g, RotationSystem{{{1}, {0}, {1}}, std::nullopt}), EmbeddingError);
    CHECK_THROWS_AS(trace_faces(g, RotationSystem{{{1}, {0, 2}}, std::nullopt}), EmbeddingError);
    CHECK_THROWS_AS(trace_faces(g, RotationSystem{{{1}, {0, 0}, {1}}, std::nullopt}), EmbeddingError);
}

TEST_CASE("disconnected graphs are flagged by euler_check")
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    RotationSystem rot{{{1}, {0}, {3}, {2}}, std::nullopt};
    CHECK_THROWS_AS(euler_check(g, trace_faces(g, rot)), DomainError);
}

TEST_CASE("P(u,v,5): three quadrilaterals and a hexagonal outer face")
{
    const Gadget p5 = build_P(5);
    CHECK(sorted_lengths(p5.faces) == std::vector<std::size_t>{4, 4, 4, 6});
    CHECK(euler_check(p5.graph(), p5.faces));
    // outer walk u, v1, v2, v, v4, v5 (traversed clockwise under our rule)
    const std::vector<Vertex> outer{frame::u, frame::path(5), frame::path(4), frame::v, frame::path(2),
                                    frame::path(1)};
    CHECK(same_cycle(p5.outer_face().walk, outer));
    CHECK(min_bounded_face_length(p5.faces, *p5.rotation.outer_face) == std::optional<std::size_t>(4));
}

TEST_CASE("P(u,v,b) for b >= 3 has shortest bounded face 4")
{
    for (std::uint64_t b = 3; b <= 16; ++b) {
        const Gadget p = build_P(b);
        CHECK(euler_check(p.graph(), p.faces));
        CHECK(min_bounded_face_length(p.faces, *p.rotation.outer_face) == std::optional<std::size_t>(4));
        CHECK(p.outer_face().length() == 6);
    }
}

TEST_CASE("T(1,1): the bare-path leaves split each frame face into two pentagons")
{
    // Hand trace: face (u,v1,v2,v3) with the path v1-a-b-v3 inside becomes
    // (v1,a,b,v3,v2) and (v1,a,b,v3,u); likewise for the other two faces.
    const Gadget t = build_T(1, 1);
    CHECK(t.faces.size() == 7);  // 2 - 13 + 18
    CHECK(sorted_lengths(t.faces) == std::vector<std::size_t>{5, 5, 5, 5, 5, 5, 6});
    CHECK(euler_check(t.graph(), t.faces));
    CHECK(min_bounded_face_length(t.faces, *t.rotation.outer_face) == std::optional<std::size_t>(5));
}

TEST_CASE("face count matches 2 - V + E on every small gadget")
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned ell = 0; ell <= 4; ++ell) {
            const Gadget t = build_T(k, ell);
            const auto faces = trace_faces(t.graph(), t.rotation);
            CAPTURE(k);
            CAPTURE(ell);
            CHECK(faces.size() + t.graph().vertex_count() == 2 + t.graph().edge_count());
            CHECK(euler_check(t.graph(), faces));
            const auto shortest = min_bounded_face_length(faces, *t.rotation.outer_face);
            if (k >= 2)
                CHECK(shortest == std::optional<std::size_t>(4));
        }
}

TEST_CASE("outer face is the unique face holding both terminals")
{
    const Gadget p5 = build_P(5);
    CHECK(designate_outer_face(p5.graph(), p5.faces, frame::u, frame::v) == *p5.rotation.outer_face);
    // u and v1 share the outer face and one quadrilateral
    CHECK_THROWS_AS(designate_outer_face(p5.graph(), p5.faces, frame::u, frame::path(1)), EmbeddingError);
}
