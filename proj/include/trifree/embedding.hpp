#pragma once

#include "trifree/graph.hpp"

#include <optional>
#include <vector>

namespace trifree {

/// Combinatorial embedding: the counter-clockwise cyclic order of neighbors
/// around each vertex. Simple graphs only, so a neighbor names an edge.
struct RotationSystem {
    std::vector<std::vector<Vertex>> order;
    /// Index into trace_faces() output of the designated outer face.
    std::optional<std::size_t> outer_face;
};

/// Closed facial walk; dart i runs walk[i] -> walk[(i+1) % size].
struct Face {
    std::vector<Vertex> walk;
    std::size_t length() const { return walk.size(); }
    bool contains(Vertex v) const;
};

/// Throws EmbeddingError unless every edge appears exactly once in each
/// endpoint's cycle and nothing else does.
void validate_rotation(const Graph& g, const RotationSystem& rot);

/// Traces faces with the rule next(a->b) = (b -> c) where c precedes a in
/// the cyclic order at b; bounded faces come out counter-clockwise. Faces are
/// emitted in order of their smallest (vertex, position) dart, so indices are
/// deterministic.
std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rot);

/// The unique face containing both terminals. An isolated terminal lies in
/// every face, so it imposes no constraint. Throws EmbeddingError when no
/// face or more than one face qualifies.
std::size_t designate_outer_face(const Graph& g, const std::vector<Face>& faces, Vertex u, Vertex v);

/// V - E + F == 2. A graph without edges counts as a single face. Throws
/// DomainError for disconnected graphs.
bool euler_check(const Graph& g, const std::vector<Face>& faces);

/// Minimum length over faces other than `outer`; nullopt when there are none.
std::optional<std::size_t> min_bounded_face_length(const std::vector<Face>& faces, std::size_t outer);

}  // namespace trifree
