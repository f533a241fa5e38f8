#pragma once

#include "trifree/bigint.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

/// Upper limit on the bit length of any power of two the bound checks build.
struct BitBudget {
    static constexpr std::uint64_t kDefaultBits = 10'000'000;
    static constexpr const char* kEnvVar = "TRIFREE_BIT_BUDGET";

    std::uint64_t bits = kDefaultBits;

    /// kDefaultBits unless TRIFREE_BIT_BUDGET holds a positive integer.
    static BitBudget from_env();

    /// 2^exponent, or BudgetError when it needs more than `bits` bits.
    BigInt pow2(const BigInt& exponent, const char* what) const;
};

/// 2^(2^(k+ell) + 3^ell). DomainError for ell = 0.
BigInt lemma3_bound(unsigned k, unsigned ell, const BitBudget& budget = {});

struct NamedCheck {
    std::string name;
    bool pass = false;
};

/// Exact total-count side of the bound chain for one ell with k = choose_k(ell).
struct Eq3Entry {
    unsigned ell = 0;
    unsigned k = 0;
    BigInt c;                // 3-colorings of T(u,v,k,ell)
    BigInt bound_exponent;   // 2^(k+ell) + 4*3^ell
    BigInt inner_count;      // 3-colorings of the V_ell-induced subgraph
    BigInt inner_size;       // |V_ell|
    bool c_below_bound = false;      // c < 2^(2^(k+ell) + 4*3^ell)
    bool inner_within_bound = false; // inner_count <= 3 * 2^(|V_ell| - 1)
    /// 3 * 2^(|V_ell|-1) <= 2^(2.5*3^ell + 1) (compared squared) and
    /// 2.5*3^ell + 1 < 3*3^ell, the two steps that turn Lemma-3-style
    /// extension bounds into the total bound.
    bool chain_steps = false;
};

Eq3Entry eq3_check(unsigned ell, const BitBudget& budget = {});

/// One row of the reproduction report.
struct BoundRow {
    unsigned ell = 0;
    unsigned k = 0;
    BigInt n;                         // exact vertex count n_ell
    bool n_from_construction = false; // n also confirmed by building the graph
    BigInt c;                         // exact coloring count c_ell
    std::vector<NamedCheck> checks;
    std::optional<std::string> error;

    bool pass() const;
    std::optional<bool> check(std::string_view name) const;
};

struct ReportOptions {
    BitBudget budget;
    /// Rows whose gadget has at most this many vertices are also built, and
    /// the closed-form sizes are compared against the real graph.
    std::uint64_t construct_limit = 2'000'000;
};

/// Every check of the chain for one ell >= 1 with k = choose_k(ell):
/// eq1, eq2, k_window, lemma3_exponent, lemma3_unequal_pairs, eq3,
/// eq3_inner_count, eq3_chain, exponent_le_6_3ell, c_le_2pow6_3ell,
/// n_ge_9half_ell (and n_matches_construction, inner_matches_construction
/// when built). Throws DomainError for ell = 0 and BudgetError.
BoundRow theorem_chain_check(unsigned ell, const ReportOptions& opts = {});

struct Report {
    std::vector<BoundRow> rows;
    bool pass() const;
};

/// Rows for ell_min..ell_max in order; a failing row records its error and
/// the remaining rows are still produced. ell_min > ell_max gives no rows.
Report build_report(unsigned ell_min, unsigned ell_max, const ReportOptions& opts = {});

void write_report_table(std::ostream& out, const Report& report);

inline constexpr int kReportVersion = 1;

}  // namespace trifree
