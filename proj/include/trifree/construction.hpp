#pragma once

#include "trifree/bigint.hpp"
#include "trifree/embedding.hpp"
#include "trifree/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace trifree {

/// Parameters of a built gadget. Bare paths P(u,v,b) have no k and ell = 0;
/// T(u,v,k,ell) has b = 2^k.
struct GadgetParams {
    std::optional<unsigned> k;
    unsigned ell = 0;
    std::uint64_t b = 0;
};

struct VertexRange {
    Vertex first = 0;
    Vertex count = 0;
    bool contains(Vertex v) const { return v >= first && v - first < count; }
};

using VertexPair = std::pair<Vertex, Vertex>;

/// The innermost P(x,y,b) copies of a gadget. `pairs[i]` are copy i's
/// terminals and `leaf_interiors[i]` its path vertices (contiguous under the
/// canonical numbering). `inner_set` is every vertex outside those interiors.
struct LeafPairRegistry {
    std::vector<VertexPair> pairs;
    std::vector<VertexRange> leaf_interiors;
    std::vector<Vertex> inner_set;  // sorted
    std::uint64_t leaf_b = 0;
};

struct Gadget {
    TerminalGraph tg;
    GadgetParams params;
    LeafPairRegistry registry;
    RotationSystem rotation;  // rotation.outer_face indexes `faces`
    std::vector<Face> faces;
    /// Terminals of the three children, (v1,v3), (v2,v4), (v3,v5); ell > 0 only.
    std::optional<std::array<VertexPair, 3>> sub_terminal_map;

    const Graph& graph() const { return tg.graph(); }
    const Face& outer_face() const { return faces.at(*rotation.outer_face); }
};

/// Canonical ids of the P(u,v,5) frame at the top of every gadget.
namespace frame {
inline constexpr Vertex u = 0;
inline constexpr Vertex v = 1;
/// Path vertex v_i for i in 1..5.
constexpr Vertex path(unsigned i) { return static_cast<Vertex>(i + 1); }
}  // namespace frame

/// Vertex budget for build_T; larger requests are rejected as DomainError.
inline constexpr std::uint64_t kDefaultMaxVertices = 50'000'000;

/// Path v1..vb with u joined to odd and v to even path vertices.
/// Vertices: u = 0, v = 1, v_i = i + 1. Throws DomainError for b = 0.
Gadget build_P(std::uint64_t b);

/// Recursive gadget; ell = 0 is P(u,v,2^k). For ell > 0 the P(u,v,5) frame
/// hosts T(v1,v3), T(v2,v4), T(v3,v5) at level ell-1 in its three 4-faces.
/// Frame vertices are numbered u, v, v1..v5, then children depth-first.
/// Throws DomainError for k = 0 or when the result exceeds max_vertices.
Gadget build_T(unsigned k, unsigned ell, std::uint64_t max_vertices = kDefaultMaxVertices);

/// 3^ell * (2^k + 2) + (3^ell - 1) / 2.
BigInt vertex_count_closed_form(unsigned k, unsigned ell);

/// 3^ell * 2^k.
BigInt vertex_lower_bound(unsigned k, unsigned ell);

/// (5 * 3^ell - 1) / 2.
BigInt inner_set_size(unsigned ell);

/// Smallest k >= 1 with 2^(k+ell) >= 3^ell. Exact integer comparison; the
/// window 3^ell <= 2^(k+ell) <= 2 * 3^ell is asserted before returning.
unsigned choose_k(unsigned ell);

}  // namespace trifree
