#include "trifree/graph.hpp"

#include "trifree/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trifree {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Vertex Graph::add_vertex()
{
    if (!labels_.empty())
        throw std::logic_error("labelled graph: add_vertex needs a label");
    adjacency_.emplace_back();
    return static_cast<Vertex>(adjacency_.size() - 1);
}

Vertex Graph::add_vertex(std::string label)
{
    if (labels_.empty() && !adjacency_.empty())
        throw std::logic_error("cannot start labelling a graph with unlabelled vertices");
    auto v = static_cast<Vertex>(adjacency_.size());
    if (!label_index_.emplace(label, v).second)
        throw std::invalid_argument("duplicate vertex label '" + label + "'");
    adjacency_.emplace_back();
    labels_.push_back(std::move(label));
    return v;
}

void Graph::add_edge(Vertex a, Vertex b)
{
    if (a >= vertex_count() || b >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (!edge_keys_.insert(key(a, b)).second)
        throw std::invalid_argument("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    edges_.push_back({std::min(a, b), std::max(a, b)});
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    return a != b && edge_keys_.contains(key(a, b));
}

const std::string& Graph::label(Vertex v) const
{
    static const std::string empty;
    if (labels_.empty())
        return empty;
    return labels_.at(v);
}

void Graph::set_label(Vertex v, std::string label)
{
    if (v >= vertex_count())
        throw std::invalid_argument("label target out of range");
    if (labels_.empty()) {
        labels_.resize(vertex_count());
        for (Vertex w = 0; w < vertex_count(); ++w) {
            labels_[w] = "#" + std::to_string(w);
            label_index_.emplace(labels_[w], w);
        }
    }
    if (auto it = label_index_.find(label); it != label_index_.end() && it->second != v)
        throw std::invalid_argument("duplicate vertex label '" + label + "'");
    label_index_.erase(labels_[v]);
    label_index_.emplace(label, v);
    labels_[v] = std::move(label);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const
{
    if (auto it = label_index_.find(std::string(label)); it != label_index_.end())
        return it->second;
    return std::nullopt;
}

bool Graph::consistent() const
{
    std::size_t half_degrees = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) {
        for (Vertex w : adjacency_[v])
            if (w >= vertex_count() || w == v || !edge_keys_.contains(key(v, w)))
                return false;
        half_degrees += adjacency_[v].size();
    }
    return half_degrees == 2 * edges_.size() && edge_keys_.size() == edges_.size();
}

Coloring::Coloring(std::initializer_list<Color> colors) : colors_(colors)
{
    for (Color c : colors_)
        if (c > kNumColors)
            throw ColoringError("color out of range {1,2,3}");
}

void Coloring::assign(Vertex v, Color c)
{
    if (c < 1 || c > kNumColors)
        throw ColoringError("color " + std::to_string(c) + " out of range {1,2,3}");
    colors_.at(v) = c;
}

Color Coloring::at(Vertex v) const
{
    Color c = colors_.at(v);
    if (c == 0)
        throw ColoringError("vertex " + std::to_string(v) + " is unassigned");
    return c;
}

std::optional<Color> Coloring::get(Vertex v) const
{
    Color c = colors_.at(v);
    if (c == 0)
        return std::nullopt;
    return c;
}

std::optional<Vertex> Coloring::first_unassigned() const
{
    auto it = std::find(colors_.begin(), colors_.end(), Color{0});
    if (it == colors_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - colors_.begin());
}

TerminalGraph::TerminalGraph(Graph g, Vertex u, Vertex v) : graph_(std::move(g)), u_(u), v_(v)
{
    if (u_ >= graph_.vertex_count() || v_ >= graph_.vertex_count())
        throw std::invalid_argument("terminal out of range");
    if (u_ == v_)
        throw std::invalid_argument("terminals must be distinct");
    if (graph_.has_edge(u_, v_))
        throw std::invalid_argument("terminals must be non-adjacent");
}

std::uint64_t triangle_count(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    // Orient each edge toward the endpoint of higher (degree, index) rank;
    // every triangle is then counted exactly once at its lowest-ranked vertex.
    auto higher = [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    };
    std::vector<std::vector<Vertex>> out(n);
    for (const Edge& e : g.edges()) {
        if (higher(e.a, e.b))
            out[e.a].push_back(e.b);
        else
            out[e.b].push_back(e.a);
    }
    std::vector<Vertex> mark(n, static_cast<Vertex>(-1));
    std::uint64_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : out[v])
            mark[w] = v;
        for (Vertex w : out[v])
            for (Vertex x : out[w])
                if (mark[x] == v)
                    ++count;
    }
    return count;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.size() != g.vertex_count())
        throw ColoringError("coloring size " + std::to_string(c.size()) + " does not match vertex count " +
                            std::to_string(g.vertex_count()));
    if (auto v = c.first_unassigned()) {
        std::string name = g.label(*v).empty() ? std::to_string(*v) : g.label(*v);
        throw ColoringError("coloring is partial: vertex " + name + " is unassigned");
    }
    return is_partial_proper(g, c);
}

bool is_partial_proper(const Graph& g, const Coloring& c)
{
    if (c.size() != g.vertex_count())
        throw ColoringError("coloring size does not match vertex count");
    auto raw = c.raw();
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return raw[e.a] != 0 && raw[e.a] == raw[e.b]; });
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    InducedSubgraph sub;
    sub.old_to_new.assign(g.vertex_count(), std::nullopt);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        sub.old_to_new[v] = static_cast<Vertex>(sub.new_to_old.size());
        sub.new_to_old.push_back(v);
        if (g.has_labels())
            sub.graph.add_vertex(g.label(v));
        else
            sub.graph.add_vertex();
    }
    for (const Edge& e : g.edges())
        if (sub.old_to_new[e.a] && sub.old_to_new[e.b])
            sub.graph.add_edge(*sub.old_to_new[e.a], *sub.old_to_new[e.b]);
    return sub;
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

namespace {

void write_graph6_size(std::ostream& out, std::uint64_t n)
{
    if (n <= 62) {
        out.put(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.put(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.put(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.put(126);
        out.put(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.put(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace

void write_graph6(std::ostream& out, const Graph& g)
{
    const std::size_t n = g.vertex_count();
    write_graph6_size(out, n);

    // Upper triangle in column order: x(0,1) x(0,2) x(1,2) x(0,3) ...
    unsigned acc = 0;
    int filled = 0;
    auto push_bit = [&](unsigned bit) {
        acc = (acc << 1) | bit;
        if (++filled == 6) {
            out.put(static_cast<char>(acc + 63));
            acc = 0;
            filled = 0;
        }
    };
    std::vector<Vertex> lower;
    for (Vertex j = 1; j < n; ++j) {
        lower.clear();
        for (Vertex i : g.neighbors(j))
            if (i < j)
                lower.push_back(i);
        std::sort(lower.begin(), lower.end());
        auto next = lower.begin();
        for (Vertex i = 0; i < j; ++i) {
            if (next != lower.end() && *next == i) {
                push_bit(1);
                ++next;
            } else {
                push_bit(0);
            }
        }
    }
    if (filled > 0) {
        acc <<= (6 - filled);
        out.put(static_cast<char>(acc + 63));
    }
}

std::string to_graph6(const Graph& g)
{
    std::ostringstream s;
    write_graph6(s, g);
    return s.str();
}

namespace {

std::string dot_quote(std::string_view s)
{
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            r += '\\';
        r += ch;
    }
    r += '"';
    return r;
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g, std::string_view name)
{
    out << "graph " << dot_quote(name) << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels())
            out << " [label=" << dot_quote(g.label(v)) << "]";
        out << ";\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.a << " -- " << e.b << ";\n";
    out << "}\n";
}

}  // namespace trifree
