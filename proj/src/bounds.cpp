#include "trifree/bounds.hpp"

#include "trifree/construction.hpp"
#include "trifree/counting.hpp"
#include "trifree/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <string_view>

namespace trifree {

BitBudget BitBudget::from_env()
{
    BitBudget budget;
    if (const char* raw = std::getenv(kEnvVar)) {
        std::string_view s(raw);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0)
            budget.bits = value;
        else
            throw DomainError(std::string(kEnvVar) + " must be a positive integer, got '" + raw + "'");
    }
    return budget;
}

BigInt BitBudget::pow2(const BigInt& exponent, const char* what) const
{
    if (exponent < 0)
        throw std::logic_error("negative exponent");
    if (exponent + 1 > BigInt(static_cast<unsigned long>(bits)))
        throw BudgetError(std::string(what) + ": 2^" + to_decimal(exponent) + " exceeds the bit budget of " +
                          std::to_string(bits));
    return trifree::pow2(to_u64(exponent));
}

BigInt lemma3_bound(unsigned k, unsigned ell, const BitBudget& budget)
{
    if (ell == 0)
        throw DomainError("the extension bound is stated for ell >= 1");
    return budget.pow2(trifree::pow2(k + ell) + pow_ui(3, ell), "lemma3_bound");
}

Eq3Entry eq3_check(unsigned ell, const BitBudget& budget)
{
    if (ell == 0)
        throw DomainError("eq3_check requires ell >= 1");
    Eq3Entry e;
    e.ell = ell;
    e.k = choose_k(ell);
    const BigInt p3 = pow_ui(3, ell);
    e.bound_exponent = trifree::pow2(e.k + ell) + 4 * p3;
    const BigInt bound = budget.pow2(e.bound_exponent, "eq3 bound");

    e.c = total_colorings(gadget_pair_counts(e.k, ell));
    e.c_below_bound = e.c < bound;

    e.inner_size = inner_set_size(ell);
    e.inner_count = total_colorings(inner_pair_counts(ell));
    const BigInt inner_bound = 3 * budget.pow2(e.inner_size - 1, "inner coloring bound");
    e.inner_within_bound = e.inner_count <= inner_bound;

    // (3 * 2^(|V|-1))^2 <= 2^(5*3^ell + 2)  and  5*3^ell + 2 < 6*3^ell
    const BigInt squared = inner_bound * inner_bound;
    e.chain_steps = squared <= budget.pow2(5 * p3 + 2, "eq3 chain") && 5 * p3 + 2 < 6 * p3;
    return e;
}

bool BoundRow::pass() const
{
    return !error && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::optional<bool> BoundRow::check(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c.pass;
    return std::nullopt;
}

BoundRow theorem_chain_check(unsigned ell, const ReportOptions& opts)
{
    if (ell == 0)
        throw DomainError("the theorem chain is checked for ell >= 1");
    const BitBudget& budget = opts.budget;
    const BigInt p3 = pow_ui(3, ell);
    // Every power of two below is at most 2^(6*3^ell); refuse up front.
    budget.pow2(6 * p3, "theorem chain");

    BoundRow row;
    row.ell = ell;
    row.k = choose_k(ell);
    const unsigned k = row.k;
    auto add = [&](std::string name, bool pass) { row.checks.push_back({std::move(name), pass}); };

    row.n = vertex_count_closed_form(k, ell);
    const BigInt inner = inner_set_size(ell);

    // |V_ell| by the recurrence |V_0| = 2, |V_l| = 3|V_{l-1}| + 1.
    BigInt inner_rec = 2;
    for (unsigned l = 0; l < ell; ++l)
        inner_rec = 3 * inner_rec + 1;

    if (row.n <= BigInt(static_cast<unsigned long>(opts.construct_limit))) {
        const Gadget t = build_T(k, ell, opts.construct_limit);
        row.n_from_construction = true;
        add("n_matches_construction", BigInt(static_cast<unsigned long>(t.graph().vertex_count())) == row.n);
        add("inner_matches_construction",
            BigInt(static_cast<unsigned long>(t.registry.inner_set.size())) == inner &&
                t.registry.pairs.size() == to_u64(p3));
    }

    add("eq1", row.n >= vertex_lower_bound(k, ell));
    add("eq2", inner == inner_rec && 2 * inner < 5 * p3);
    const BigInt window = trifree::pow2(k + ell);
    add("k_window", p3 <= window && window <= 2 * p3);

    const ExtensionExtremes extremes = extension_extremes(k, ell);
    add("lemma3_exponent", extremes.max_extensions <= lemma3_bound(k, ell, budget));
    add("lemma3_unequal_pairs", BigInt(static_cast<unsigned long>(extremes.max_unequal_pairs)) <= trifree::pow2(ell));

    const Eq3Entry e = eq3_check(ell, budget);
    row.c = e.c;
    add("eq3", e.c_below_bound);
    add("eq3_inner_count", e.inner_within_bound);
    add("eq3_chain", e.chain_steps);

    add("exponent_le_6_3ell", window + 4 * p3 <= 6 * p3);
    add("c_le_2pow6_3ell", row.c <= budget.pow2(6 * p3, "2^(6*3^ell)"));
    add("n_ge_9half_ell", pow_ui(9, ell) <= row.n * trifree::pow2(ell));
    return row;
}

bool Report::pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.pass(); });
}

Report build_report(unsigned ell_min, unsigned ell_max, const ReportOptions& opts)
{
    Report report;
    if (ell_min > ell_max)
        return report;
    for (unsigned ell = ell_min;; ++ell) {
        try {
            report.rows.push_back(theorem_chain_check(ell, opts));
        } catch (const std::exception& ex) {
            BoundRow row;
            row.ell = ell;
            row.error = ex.what();
            report.rows.push_back(std::move(row));
        }
        if (ell == ell_max)
            break;
    }
    return report;
}

void write_report_table(std::ostream& out, const Report& report)
{
    out << std::left << std::setw(5) << "ell" << std::setw(4) << "k" << std::setw(14) << "n" << std::setw(10)
        << "c_bits"
        << "checks\n";
    for (const BoundRow& row : report.rows) {
        out << std::setw(5) << row.ell;
        if (row.error) {
            out << "error: " << *row.error << '\n';
            continue;
        }
        out << std::setw(4) << row.k << std::setw(14) << to_decimal(row.n) << std::setw(10) << bit_length(row.c);
        std::size_t passed = 0;
        std::string failed;
        for (const auto& c : row.checks) {
            if (c.pass)
                ++passed;
            else
                failed += " " + c.name;
        }
        out << passed << "/" << row.checks.size() << (failed.empty() ? " pass" : " FAIL:" + failed) << '\n';
    }
}

}  // namespace trifree
