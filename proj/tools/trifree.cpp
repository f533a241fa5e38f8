// trifree: build the triangle-free gadget graphs, count their 3-colorings
// and check the bound chain.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 I/O error.

#include "trifree/bounds.hpp"
#include "trifree/construction.hpp"
#include "trifree/counting.hpp"
#include "trifree/error.hpp"
#include "trifree/serialize.hpp"
#include "trifree/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace trifree;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GadgetArgs {
    std::optional<unsigned> k;
    unsigned ell = 0;
    std::optional<std::uint64_t> b;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--k", k, "leaf path length exponent, b = 2^k (k >= 1)");
        cmd.add_option("--ell", ell, "recursion depth");
        cmd.add_option("--b", b, "build the bare path gadget P(u,v,b) instead of T");
    }

    Gadget build() const
    {
        if (b) {
            if (k || ell != 0)
                throw DomainError("--b cannot be combined with --k/--ell");
            return build_P(*b);
        }
        if (!k)
            throw DomainError("--k is required");
        return build_T(*k, ell);
    }

    std::uint64_t vertex_count() const
    {
        if (b)
            return *b + 2;
        if (!k || *k == 0)
            throw DomainError("--k must be >= 1");
        const BigInt n = vertex_count_closed_form(*k, ell);
        return fits_u64(n) ? to_u64(n) : UINT64_MAX;
    }
};

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    return file;
}

int cmd_generate(const GadgetArgs& args, const std::string& format_name, bool json, bool faces,
                 const std::string& output)
{
    const Format format = json ? Format::json : parse_format(format_name);
    const Gadget g = args.build();
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    write_gadget(out, g, format, faces);
    out.flush();
    if (!out)
        throw IoError("write failed");
    return kExitOk;
}

int cmd_count(const GadgetArgs& args, const std::string& method, std::optional<unsigned> fix_u,
              std::optional<unsigned> fix_v, bool full, bool force, std::size_t cutoff, bool json)
{
    auto color = [](std::optional<unsigned> c) -> std::optional<Color> {
        if (!c)
            return std::nullopt;
        if (*c < 1 || *c > 3)
            throw DomainError("terminal colors are 1, 2 or 3");
        return static_cast<Color>(*c);
    };
    const std::optional<Color> cu = color(fix_u), cv = color(fix_v);

    BigInt count;
    if (method == "dp") {
        PairCounts pc;
        if (args.b) {
            if (args.k || args.ell != 0)
                throw DomainError("--b cannot be combined with --k/--ell");
            pc = path_pair_counts(*args.b);
        } else {
            if (!args.k)
                throw DomainError("--k is required");
            pc = gadget_pair_counts(*args.k, args.ell);
        }
        count = colorings_with_terminals(pc, cu, cv);
    } else if (method == "brute") {
        const BruteForceOptions opts{cutoff, force};
        const std::uint64_t n = args.vertex_count();
        if (!force && n > cutoff)
            throw DomainError("brute force refused: " + std::to_string(n) + " vertices exceeds the cutoff of " +
                              std::to_string(cutoff) + " (use --force)");
        const Gadget g = args.build();
        Coloring fixed(g.graph().vertex_count());
        if (cu)
            fixed.assign(g.tg.u(), *cu);
        if (cv)
            fixed.assign(g.tg.v(), *cv);
        count = count_colorings_bruteforce(g.graph(), fixed, opts);
    } else {
        throw DomainError("unknown method '" + method + "' (expected dp or brute)");
    }

    if (json) {
        nlohmann::json j = {{"method", method}, {"ell", args.ell}, {"count", count_to_json(count)}};
        j["k"] = args.k ? nlohmann::json(*args.k) : nlohmann::json(nullptr);
        if (args.b)
            j["b"] = *args.b;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "bit_length: " << bit_length(count) << '\n';
        if (full)
            std::cout << "count: " << to_decimal(count) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite_name_arg, std::optional<unsigned> ell_max, bool json)
{
    VerifyOptions opts;
    opts.ell_max = ell_max;
    opts.budget = BitBudget::from_env();
    const auto results = run_verification(parse_suite(suite_name_arg), opts);
    bool pass = true;
    if (json) {
        const auto j = suites_to_json(results);
        pass = j["pass"].get<bool>();
        std::cout << j.dump() << '\n';
    } else {
        for (const SuiteResult& s : results) {
            for (const CheckResult& c : s.checks)
                std::cout << (c.pass ? "PASS " : "FAIL ") << s.suite << ": " << c.name << " - " << c.detail
                          << '\n';
            std::cout << s.suite << ": " << (s.pass() ? "pass" : "FAIL") << '\n';
            pass = pass && s.pass();
        }
    }
    return pass ? kExitOk : kExitFailed;
}

int cmd_report(unsigned ell_min, unsigned ell_max, bool json, bool decimal, const std::string& output)
{
    ReportOptions opts;
    opts.budget = BitBudget::from_env();
    const Report report = build_report(ell_min, ell_max, opts);
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (json)
        out << report_to_json(report, decimal).dump(2) << '\n';
    else
        write_report_table(out, report);
    out.flush();
    if (!out)
        throw IoError("write failed");
    return report.pass() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Triangle-free planar gadgets with few 3-colorings"};
    app.require_subcommand(1);

    GadgetArgs gen_args;
    std::string format = "json", output;
    bool gen_json = false, faces = false;
    auto* gen = app.add_subcommand("generate", "write a gadget as json, dot or graph6");
    gen_args.add_to(*gen);
    gen->add_option("--format", format, "json, dot or graph6");
    gen->add_option("-o,--output", output, "output file (default stdout)");
    gen->add_flag("--faces", faces, "include traced faces in the json descriptor");
    gen->add_flag("--json", gen_json, "same as --format json");

    GadgetArgs count_args;
    std::string method = "dp";
    std::optional<unsigned> fix_u, fix_v;
    bool full = false, force = false, count_json = false;
    std::size_t cutoff = BruteForceOptions{}.cutoff;
    auto* count = app.add_subcommand("count", "count proper 3-colorings exactly");
    count_args.add_to(*count);
    count->add_option("--method", method, "dp or brute");
    count->add_option("--fix-u", fix_u, "pin the color of terminal u");
    count->add_option("--fix-v", fix_v, "pin the color of terminal v");
    count->add_flag("--full", full, "print the full decimal count");
    count->add_flag("--force", force, "run brute force beyond the cutoff");
    count->add_option("--cutoff", cutoff, "brute-force vertex cutoff");
    count->add_flag("--json", count_json, "machine-readable output");

    std::string suite = "all";
    std::optional<unsigned> ell_max;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "lemma2, remark, lemma3, eq3, theorem, embedding or all");
    verify->add_option("--ell-max", ell_max, "largest ell to check");
    verify->add_flag("--json", verify_json, "machine-readable output");

    unsigned rep_min = 1, rep_max = 8;
    bool rep_json = false, rep_decimal = false;
    std::string rep_output;
    auto* report = app.add_subcommand("report", "bound-chain table, one row per ell");
    report->add_option("--ell-min", rep_min, "first ell");
    report->add_option("--ell-max", rep_max, "last ell");
    report->add_flag("--json", rep_json, "json instead of a table");
    report->add_flag("--decimal", rep_decimal, "include c_ell in decimal (json)");
    report->add_option("-o,--output", rep_output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen)
            return cmd_generate(gen_args, format, gen_json, faces, output);
        if (*count)
            return cmd_count(count_args, method, fix_u, fix_v, full, force, cutoff, count_json);
        if (*verify)
            return cmd_verify(suite, ell_max, verify_json);
        if (*report)
            return cmd_report(rep_min, rep_max, rep_json, rep_decimal, rep_output);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ColoringError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
