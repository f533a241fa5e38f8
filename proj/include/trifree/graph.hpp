#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace trifree {

using Vertex = std::uint32_t;
using Color = std::uint8_t;  // 1, 2, 3; 0 marks "unassigned" inside Coloring

inline constexpr Color kNumColors = 3;

struct Edge {
    Vertex a;
    Vertex b;  // a < b
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on dense 0-based vertex indices.
///
/// Edges are held twice: a hash set for O(1) containment and parallel
/// adjacency lists for iteration. Every mutator keeps the two in sync.
/// Labels are optional decoration and never consulted for adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    Vertex add_vertex();
    Vertex add_vertex(std::string label);

    /// Throws std::invalid_argument on self-loops, parallel edges and
    /// out-of-range endpoints.
    void add_edge(Vertex a, Vertex b);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(Vertex a, Vertex b) const;
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }
    /// Empty string when the graph carries no labels.
    const std::string& label(Vertex v) const;
    void set_label(Vertex v, std::string label);
    std::optional<Vertex> find_label(std::string_view label) const;

    /// Debug-style consistency check of the set/list duplication.
    bool consistent() const;

private:
    static std::uint64_t key(Vertex a, Vertex b)
    {
        if (a > b)
            std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
};

/// Possibly partial assignment of colors 1..3 to vertices.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t vertex_count) : colors_(vertex_count, 0) {}
    Coloring(std::initializer_list<Color> colors);

    std::size_t size() const { return colors_.size(); }
    void assign(Vertex v, Color c);
    void clear(Vertex v) { colors_.at(v) = 0; }
    bool assigned(Vertex v) const { return colors_.at(v) != 0; }
    /// Throws if unassigned.
    Color at(Vertex v) const;
    std::optional<Color> get(Vertex v) const;
    std::optional<Vertex> first_unassigned() const;
    bool total() const { return !first_unassigned(); }
    std::span<const Color> raw() const { return colors_; }

private:
    std::vector<Color> colors_;
};

/// A graph with two distinguished, distinct, non-adjacent terminals.
class TerminalGraph {
public:
    TerminalGraph(Graph g, Vertex u, Vertex v);

    const Graph& graph() const { return graph_; }
    Vertex u() const { return u_; }
    Vertex v() const { return v_; }

private:
    Graph graph_;
    Vertex u_;
    Vertex v_;
};

struct InducedSubgraph {
    Graph graph;
    /// old index -> new index, nullopt for vertices outside the set
    std::vector<std::optional<Vertex>> old_to_new;
    std::vector<Vertex> new_to_old;
};

std::uint64_t triangle_count(const Graph& g);

/// True iff no edge is monochromatic. Throws ColoringError naming the first
/// unassigned vertex when c is partial.
bool is_proper(const Graph& g, const Coloring& c);

/// True iff no edge with both endpoints assigned is monochromatic.
bool is_partial_proper(const Graph& g, const Coloring& c);

/// Vertices keep their relative order; labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_connected(const Graph& g);

/// graph6 line (no trailing newline, no ">>graph6<<" header).
std::string to_graph6(const Graph& g);
void write_graph6(std::ostream& out, const Graph& g);

void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");

}  // namespace trifree
