#pragma once

#include "trifree/bigint.hpp"
#include "trifree/bounds.hpp"
#include "trifree/construction.hpp"

#include <json.hpp>

#include <ostream>
#include <string_view>

namespace trifree {

enum class Format { json, dot, graph6 };

/// Throws DomainError for anything but "json", "dot", "graph6".
Format parse_format(std::string_view name);

/// {k, ell, b, vertex_count, edge_count, terminals, edges, labels, leaf_pairs,
///  inner_set, rotation, outer_face[, faces]}
nlohmann::json gadget_to_json(const Gadget& g, bool include_faces = false);

void write_gadget(std::ostream& out, const Gadget& g, Format format, bool include_faces = false);

/// {decimal_string, bit_length}
nlohmann::json count_to_json(const BigInt& count);

/// {version, rows: [{ell, k, n, c_bits, c_decimal?, checks: {name: bool}, pass[, error]}]}
nlohmann::json report_to_json(const Report& report, bool include_decimal);

}  // namespace trifree
