#include "trifree/construction.hpp"

#include "trifree/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trifree {

namespace {

/// Edges of a gadget at one terminal, in counter-clockwise order, with the
/// gadget's outer face in the gap between the last and the first entry.
struct TerminalBlocks {
    std::vector<Vertex> at_u;
    std::vector<Vertex> at_v;
};

void append(std::vector<Vertex>& dst, const std::vector<Vertex>& src)
{
    dst.insert(dst.end(), src.begin(), src.end());
}

class Builder {
public:
    Builder(std::uint64_t leaf_b, std::size_t expected_vertices) : leaf_b_(leaf_b)
    {
        rot_.reserve(expected_vertices);
    }

    Vertex vertex(std::string label)
    {
        rot_.emplace_back();
        return g_.add_vertex(std::move(label));
    }

    /// Plants P(x, y, leaf_b) with fresh path vertices.
    TerminalBlocks leaf(Vertex x, Vertex y, const std::string& prefix)
    {
        const auto first = static_cast<Vertex>(g_.vertex_count());
        std::vector<Vertex> w(leaf_b_);
        for (std::uint64_t i = 0; i < leaf_b_; ++i)
            w[i] = vertex(prefix + "v" + std::to_string(i + 1));
        for (std::uint64_t i = 0; i + 1 < leaf_b_; ++i)
            g_.add_edge(w[i], w[i + 1]);

        TerminalBlocks blocks;
        for (std::uint64_t i = 0; i < leaf_b_; ++i) {
            // 1-based index i+1 odd <=> attached to x.
            const bool odd = (i % 2) == 0;
            g_.add_edge(odd ? x : y, w[i]);
            auto& r = rot_[w[i]];
            if (i + 1 < leaf_b_)
                r.push_back(w[i + 1]);
            if (odd)
                r.push_back(x);
            if (i > 0)
                r.push_back(w[i - 1]);
            if (!odd)
                r.push_back(y);
            if (odd)
                blocks.at_u.push_back(w[i]);
        }
        for (std::uint64_t i = leaf_b_; i-- > 0;)
            if (i % 2 == 1)
                blocks.at_v.push_back(w[i]);

        registry_.pairs.emplace_back(x, y);
        registry_.leaf_interiors.push_back({first, static_cast<Vertex>(leaf_b_)});
        return blocks;
    }

    /// Plants T(x, y, k, ell) for ell >= 1.
    TerminalBlocks frame(Vertex x, Vertex y, unsigned ell, const std::string& prefix)
    {
        std::array<Vertex, 6> p{};  // p[1..5] = v1..v5
        for (unsigned i = 1; i <= 5; ++i) {
            p[i] = vertex(prefix + "v" + std::to_string(i));
            registry_.inner_set.push_back(p[i]);
        }
        for (unsigned i = 1; i < 5; ++i)
            g_.add_edge(p[i], p[i + 1]);
        for (unsigned i : {1u, 3u, 5u})
            g_.add_edge(x, p[i]);
        for (unsigned i : {2u, 4u})
            g_.add_edge(y, p[i]);

        const std::array<VertexPair, 3> children{{{p[1], p[3]}, {p[2], p[4]}, {p[3], p[5]}}};
        std::array<TerminalBlocks, 3> c;
        for (unsigned i = 0; i < 3; ++i) {
            std::string child_prefix = prefix + (ell > 1 ? "T" : "P") + std::to_string(i) + ".";
            c[i] = ell > 1 ? frame(children[i].first, children[i].second, ell - 1, child_prefix)
                           : leaf(children[i].first, children[i].second, child_prefix);
        }

        // P(x,y,5) rotations with each child spliced into the corner of the
        // 4-face it fills: (x,v1,v2,v3), (v2,v3,v4,y), (v3,v4,v5,x).
        auto& r1 = rot_[p[1]];
        r1 = {p[2]};
        append(r1, c[0].at_u);
        r1.push_back(x);

        auto& r2 = rot_[p[2]];
        r2 = {p[3], p[1], y};
        append(r2, c[1].at_u);

        auto& r3 = rot_[p[3]];
        r3 = {p[4]};
        append(r3, c[2].at_u);
        r3.push_back(x);
        append(r3, c[0].at_v);
        r3.push_back(p[2]);

        auto& r4 = rot_[p[4]];
        r4 = {p[5], p[3]};
        append(r4, c[1].at_v);
        r4.push_back(y);

        auto& r5 = rot_[p[5]];
        r5 = {x};
        append(r5, c[2].at_v);
        r5.push_back(p[4]);

        return {{p[1], p[3], p[5]}, {p[4], p[2]}};
    }

    Gadget finish(Vertex u, Vertex v, const TerminalBlocks& top, GadgetParams params,
                  std::optional<std::array<VertexPair, 3>> sub_terminal_map = std::nullopt)
    {
        rot_[u] = top.at_u;
        rot_[v] = top.at_v;
        registry_.inner_set.push_back(u);
        registry_.inner_set.push_back(v);
        std::sort(registry_.inner_set.begin(), registry_.inner_set.end());
        registry_.leaf_b = leaf_b_;

        if (!g_.consistent())
            throw std::logic_error("gadget graph lost edge set / adjacency consistency");
        if (triangle_count(g_) != 0)
            throw std::logic_error("constructed gadget contains a triangle");

        RotationSystem rotation{std::move(rot_), std::nullopt};
        std::vector<Face> faces = trace_faces(g_, rotation);
        rotation.outer_face = designate_outer_face(g_, faces, u, v);

        return Gadget{TerminalGraph(std::move(g_), u, v), params, std::move(registry_), std::move(rotation),
                      std::move(faces), sub_terminal_map};
    }

private:
    std::uint64_t leaf_b_;
    Graph g_;
    std::vector<std::vector<Vertex>> rot_;
    LeafPairRegistry registry_;
};

}  // namespace

Gadget build_P(std::uint64_t b)
{
    if (b == 0)
        throw DomainError("P(u,v,b) requires b >= 1");
    if (b > kDefaultMaxVertices)
        throw DomainError("P(u,v,b): b exceeds the vertex budget");
    Builder builder(b, b + 2);
    Vertex u = builder.vertex("u");
    Vertex v = builder.vertex("v");
    TerminalBlocks top = builder.leaf(u, v, "");
    return builder.finish(u, v, top, GadgetParams{std::nullopt, 0, b});
}

Gadget build_T(unsigned k, unsigned ell, std::uint64_t max_vertices)
{
    if (k == 0)
        throw DomainError("T(u,v,k,ell) requires k >= 1");
    const BigInt n = vertex_count_closed_form(k, ell);
    if (n > BigInt(static_cast<unsigned long>(max_vertices)))
        throw DomainError("T(u,v," + std::to_string(k) + "," + std::to_string(ell) + ") has " + to_decimal(n) +
                          " vertices, above the limit of " + std::to_string(max_vertices));

    const std::uint64_t b = std::uint64_t{1} << k;
    Builder builder(b, to_u64(n));
    Vertex u = builder.vertex("u");
    Vertex v = builder.vertex("v");
    if (ell == 0)
        return builder.finish(u, v, builder.leaf(u, v, ""), GadgetParams{k, ell, b});
    TerminalBlocks top = builder.frame(u, v, ell, "");
    using frame::path;
    return builder.finish(u, v, top, GadgetParams{k, ell, b},
                          std::array<VertexPair, 3>{{{path(1), path(3)}, {path(2), path(4)}, {path(3), path(5)}}});
}

BigInt vertex_count_closed_form(unsigned k, unsigned ell)
{
    const BigInt p3 = pow_ui(3, ell);
    return p3 * (pow2(k) + 2) + (p3 - 1) / 2;
}

BigInt vertex_lower_bound(unsigned k, unsigned ell) { return pow_ui(3, ell) * pow2(k); }

BigInt inner_set_size(unsigned ell) { return (5 * pow_ui(3, ell) - 1) / 2; }

unsigned choose_k(unsigned ell)
{
    const BigInt p3 = pow_ui(3, ell);
    unsigned k = 1;
    while (pow2(k + ell) < p3)
        ++k;
    if (!(p3 <= pow2(k + ell) && pow2(k + ell) <= 2 * p3))
        throw std::logic_error("choose_k: 3^ell <= 2^(k+ell) <= 2*3^ell violated at ell=" + std::to_string(ell));
    return k;
}

}  // namespace trifree
