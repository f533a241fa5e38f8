#include "trifree/serialize.hpp"

#include "trifree/error.hpp"

#include <string>

namespace trifree {

Format parse_format(std::string_view name)
{
    if (name == "json")
        return Format::json;
    if (name == "dot")
        return Format::dot;
    if (name == "graph6")
        return Format::graph6;
    throw DomainError("unknown format '" + std::string(name) + "' (expected json, dot or graph6)");
}

namespace {

nlohmann::json big_to_json(const BigInt& x)
{
    if (fits_u64(x))
        return to_u64(x);
    return to_decimal(x);
}

}  // namespace

nlohmann::json gadget_to_json(const Gadget& g, bool include_faces)
{
    using nlohmann::json;
    const Graph& graph = g.graph();
    json j;
    j["k"] = g.params.k ? json(*g.params.k) : json(nullptr);
    j["ell"] = g.params.ell;
    j["b"] = g.params.b;
    j["vertex_count"] = graph.vertex_count();
    j["edge_count"] = graph.edge_count();
    j["terminals"] = {g.tg.u(), g.tg.v()};

    json edges = json::array();
    for (const Edge& e : graph.edges())
        edges.push_back({e.a, e.b});
    j["edges"] = std::move(edges);

    json labels = json::array();
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        labels.push_back(graph.label(v));
    j["labels"] = std::move(labels);

    json pairs = json::array();
    for (const auto& [x, y] : g.registry.pairs)
        pairs.push_back({x, y});
    j["leaf_pairs"] = std::move(pairs);
    j["leaf_b"] = g.registry.leaf_b;
    j["inner_set"] = g.registry.inner_set;
    j["rotation"] = g.rotation.order;
    j["outer_face"] = *g.rotation.outer_face;
    if (include_faces) {
        json faces = json::array();
        for (const Face& f : g.faces)
            faces.push_back(f.walk);
        j["faces"] = std::move(faces);
    }
    return j;
}

void write_gadget(std::ostream& out, const Gadget& g, Format format, bool include_faces)
{
    switch (format) {
    case Format::json:
        out << gadget_to_json(g, include_faces).dump() << '\n';
        break;
    case Format::dot:
        write_dot(out, g.graph(), g.params.k ? "T" : "P");
        break;
    case Format::graph6:
        write_graph6(out, g.graph());
        out << '\n';
        break;
    }
}

nlohmann::json count_to_json(const BigInt& count)
{
    return {{"decimal_string", to_decimal(count)}, {"bit_length", bit_length(count)}};
}

nlohmann::json report_to_json(const Report& report, bool include_decimal)
{
    using nlohmann::json;
    json rows = json::array();
    for (const BoundRow& row : report.rows) {
        json r;
        r["ell"] = row.ell;
        if (row.error) {
            r["error"] = *row.error;
            r["pass"] = false;
            rows.push_back(std::move(r));
            continue;
        }
        r["k"] = row.k;
        r["n"] = big_to_json(row.n);
        r["c_bits"] = bit_length(row.c);
        if (include_decimal)
            r["c_decimal"] = to_decimal(row.c);
        json checks = json::object();
        for (const auto& c : row.checks)
            checks[c.name] = c.pass;
        r["checks"] = std::move(checks);
        r["pass"] = row.pass();
        rows.push_back(std::move(r));
    }
    return {{"version", kReportVersion}, {"rows", std::move(rows)}};
}

}  // namespace trifree
