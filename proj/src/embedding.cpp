#include "trifree/embedding.hpp"

#include "trifree/error.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace trifree {

bool Face::contains(Vertex v) const
{
    return std::find(walk.begin(), walk.end(), v) != walk.end();
}

void validate_rotation(const Graph& g, const RotationSystem& rot)
{
    if (rot.order.size() != g.vertex_count())
        throw EmbeddingError("rotation system covers " + std::to_string(rot.order.size()) + " vertices, graph has " +
                             std::to_string(g.vertex_count()));
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        a.assign(rot.order[v].begin(), rot.order[v].end());
        b.assign(g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw EmbeddingError("rotation at vertex " + std::to_string(v) + " does not list its incident edges exactly once");
    }
}

std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rot)
{
    validate_rotation(g, rot);
    const std::size_t n = g.vertex_count();

    // Darts are numbered offset[v] + i for the i-th entry of rot.order[v].
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + rot.order[v].size();
    const std::size_t darts = offset[n];

    // position_at_head[d] = index of d's origin inside its head's cycle.
    std::vector<std::uint32_t> position_at_head(darts);
    {
        std::unordered_map<std::uint64_t, std::uint32_t> where;
        where.reserve(darts);
        for (Vertex v = 0; v < n; ++v)
            for (std::uint32_t i = 0; i < rot.order[v].size(); ++i)
                where.emplace((static_cast<std::uint64_t>(v) << 32) | rot.order[v][i], i);
        for (Vertex v = 0; v < n; ++v)
            for (std::uint32_t i = 0; i < rot.order[v].size(); ++i) {
                Vertex w = rot.order[v][i];
                position_at_head[offset[v] + i] = where.at((static_cast<std::uint64_t>(w) << 32) | v);
            }
    }

    std::vector<char> used(darts, 0);
    std::vector<Face> faces;
    for (Vertex v = 0; v < n; ++v) {
        for (std::uint32_t i = 0; i < rot.order[v].size(); ++i) {
            if (used[offset[v] + i])
                continue;
            Face face;
            Vertex at = v;
            std::uint32_t idx = i;
            while (!used[offset[at] + idx]) {
                used[offset[at] + idx] = 1;
                face.walk.push_back(at);
                Vertex head = rot.order[at][idx];
                std::uint32_t deg = static_cast<std::uint32_t>(rot.order[head].size());
                std::uint32_t back = position_at_head[offset[at] + idx];
                idx = (back + deg - 1) % deg;
                at = head;
            }
            if (at != v || idx != i)
                throw EmbeddingError("face tracing did not close up");
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

std::size_t designate_outer_face(const Graph& g, const std::vector<Face>& faces, Vertex u, Vertex v)
{
    auto on = [&](const Face& f, Vertex t) { return g.degree(t) == 0 || f.contains(t); };
    std::optional<std::size_t> found;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (on(faces[f], u) && on(faces[f], v)) {
            if (found)
                throw EmbeddingError("more than one face contains both terminals");
            found = f;
        }
    }
    if (!found)
        throw EmbeddingError("no face contains both terminals");
    return *found;
}

bool euler_check(const Graph& g, const std::vector<Face>& faces)
{
    if (!is_connected(g))
        throw DomainError("euler_check: graph is disconnected");
    const auto v = static_cast<long long>(g.vertex_count());
    const auto e = static_cast<long long>(g.edge_count());
    const auto f = e == 0 ? 1LL : static_cast<long long>(faces.size());
    return v - e + f == 2;
}

std::optional<std::size_t> min_bounded_face_length(const std::vector<Face>& faces, std::size_t outer)
{
    std::optional<std::size_t> best;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (f == outer)
            continue;
        if (!best || faces[f].length() < *best)
            best = faces[f].length();
    }
    return best;
}

}  // namespace trifree
