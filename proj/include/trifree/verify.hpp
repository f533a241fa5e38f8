#pragma once

#include "trifree/bigint.hpp"
#include "trifree/bounds.hpp"
#include "trifree/construction.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trifree {

/// Structural facts that together certify "triangle-free plane graph with
/// both terminals on the outer face".
struct StructureCertificate {
    std::uint64_t triangles = 0;
    bool euler = false;
    std::size_t face_count = 0;
    std::optional<std::size_t> min_bounded_face;
    bool terminals_non_adjacent = false;
    bool terminals_on_outer_face = false;
};

StructureCertificate certify_structure(const Gadget& g);

/// Exhaustive pass over every proper coloring psi of the V_ell-induced
/// subgraph of T(u,v,k,ell).
struct ExtensionSweep {
    std::uint64_t colorings = 0;
    BigInt max_extensions;
    BigInt sum_extensions;
    std::uint64_t max_unequal_pairs = 0;
};

ExtensionSweep sweep_extensions(const Gadget& t);

enum class Suite { lemma2, remark, lemma3, eq3, theorem, embedding, all };

/// Throws DomainError for unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

struct VerifyOptions {
    /// Suite-specific default when unset: lemma3 2, eq3/theorem 8, embedding 4.
    std::optional<unsigned> ell_max;
    BitBudget budget;
    /// lemma3 enumerates V_ell colorings exhaustively while the count of
    /// such colorings stays at or below this; above it only the max-product
    /// recursion is used.
    std::uint64_t enumeration_limit = 5'000'000;
};

/// DomainError when ell_max is outside the suite's domain (lemma3 needs >= 1).
std::vector<SuiteResult> run_verification(Suite suite, const VerifyOptions& opts = {});

nlohmann::json suites_to_json(const std::vector<SuiteResult>& results);

}  // namespace trifree
