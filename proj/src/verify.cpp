#include "trifree/verify.hpp"

#include "trifree/counting.hpp"
#include "trifree/embedding.hpp"
#include "trifree/error.hpp"

#include <algorithm>
#include <string>

namespace trifree {

StructureCertificate certify_structure(const Gadget& g)
{
    StructureCertificate cert;
    const Graph& graph = g.graph();
    cert.triangles = triangle_count(graph);
    // Re-trace rather than trusting the faces stored at construction.
    const std::vector<Face> faces = trace_faces(graph, g.rotation);
    cert.face_count = faces.size();
    cert.euler = euler_check(graph, faces);
    const std::size_t outer = designate_outer_face(graph, faces, g.tg.u(), g.tg.v());
    cert.min_bounded_face = min_bounded_face_length(faces, outer);
    cert.terminals_non_adjacent = g.tg.u() != g.tg.v() && !graph.has_edge(g.tg.u(), g.tg.v());
    cert.terminals_on_outer_face = faces[outer].contains(g.tg.u()) && faces[outer].contains(g.tg.v());
    return cert;
}

ExtensionSweep sweep_extensions(const Gadget& t)
{
    const InducedSubgraph sub = induced_subgraph(t.graph(), t.registry.inner_set);
    ExtensionSweep sweep;
    sweep.max_extensions = 0;
    sweep.sum_extensions = 0;
    Coloring psi(t.graph().vertex_count());
    for_each_proper_coloring(sub.graph, {}, [&](const Coloring& local) {
        for (Vertex i = 0; i < sub.new_to_old.size(); ++i)
            psi.assign(sub.new_to_old[i], local.at(i));
        const BigInt ext = count_extensions(t, psi);
        ++sweep.colorings;
        sweep.sum_extensions += ext;
        if (ext > sweep.max_extensions)
            sweep.max_extensions = ext;
        std::uint64_t unequal = 0;
        for (const auto& [x, y] : t.registry.pairs)
            unequal += psi.at(x) != psi.at(y);
        sweep.max_unequal_pairs = std::max(sweep.max_unequal_pairs, unequal);
    });
    return sweep;
}

namespace {

constexpr Suite kAllSuites[] = {Suite::lemma2, Suite::remark, Suite::lemma3,
                                Suite::eq3,    Suite::theorem, Suite::embedding};

std::string params(unsigned k, unsigned ell)
{
    return "(k=" + std::to_string(k) + ", ell=" + std::to_string(ell) + ")";
}

SuiteResult run_lemma2()
{
    SuiteResult r{"lemma2", {}};
    const Gadget p5 = build_P(5);
    std::uint64_t total = 0, case_a = 0, case_b = 0, case_b_ok = 0;
    for_each_proper_coloring(p5.graph(), {}, [&](const Coloring& psi) {
        const Lemma2Verdict verdict = lemma2_classify(p5, psi);
        ++total;
        case_a += verdict.case_a_holds();
        if (verdict.case_b_applies) {
            ++case_b;
            case_b_ok += verdict.alternating();
        }
    });
    r.checks.push_back({"P(u,v,5) proper colorings = 84", total == 84, std::to_string(total) + " colorings"});
    r.checks.push_back({"(a) some pair equal", case_a == total,
                        std::to_string(case_a) + "/" + std::to_string(total) + " colorings classified"});
    r.checks.push_back({"(b) psi(u)=psi(v) forces v1=v3=v5, v2=v4", case_b_ok == case_b,
                        std::to_string(case_b_ok) + "/" + std::to_string(case_b)});
    return r;
}

SuiteResult run_remark()
{
    SuiteResult r{"remark", {}};
    for (std::uint64_t b = 1; b <= 12; ++b) {
        const PairCounts pc = path_pair_counts(b);
        const Gadget p = build_P(b);
        Coloring fixed(p.graph().vertex_count());
        fixed.assign(frame::u, 1);
        fixed.assign(frame::v, 1);
        const BigInt brute = count_colorings_bruteforce(p.graph(), fixed);
        r.checks.push_back({"P(u,v," + std::to_string(b) + ") same = 2", pc.same == 2 && brute == 2,
                            "transfer " + to_decimal(pc.same) + ", brute force " + to_decimal(brute)});
    }
    return r;
}

SuiteResult run_lemma3(unsigned ell_max, const VerifyOptions& opts)
{
    if (ell_max == 0)
        throw DomainError("the lemma3 suite requires ell >= 1");
    SuiteResult r{"lemma3", {}};
    for (unsigned k : {1u, 2u}) {
        for (unsigned ell = 1; ell <= ell_max; ++ell) {
            const BigInt bound = lemma3_bound(k, ell, opts.budget);
            const ExtensionExtremes extremes = extension_extremes(k, ell);
            const BigInt inner_total = total_colorings(inner_pair_counts(ell));
            std::string detail = "max " + to_decimal(extremes.max_extensions) + " <= 2^" +
                                 std::to_string(bit_length(bound) - 1);
            bool pass = extremes.max_extensions <= bound &&
                        BigInt(static_cast<unsigned long>(extremes.max_unequal_pairs)) <= pow2(ell);
            if (inner_total <= BigInt(static_cast<unsigned long>(opts.enumeration_limit))) {
                const Gadget t = build_T(k, ell);
                const ExtensionSweep sweep = sweep_extensions(t);
                const BigInt total = total_colorings(gadget_pair_counts(k, ell));
                pass = pass && sweep.max_extensions <= bound && sweep.sum_extensions == total &&
                       sweep.max_extensions == extremes.max_extensions &&
                       sweep.max_unequal_pairs == extremes.max_unequal_pairs;
                detail += ", exhaustive over " + std::to_string(sweep.colorings) + " colorings, sum = " +
                          to_decimal(sweep.sum_extensions);
            } else {
                detail += ", max-product recursion only";
            }
            r.checks.push_back({"extensions " + params(k, ell), pass, detail});
        }
    }
    return r;
}

SuiteResult run_eq3(unsigned ell_max, const VerifyOptions& opts)
{
    SuiteResult r{"eq3", {}};
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
        try {
            const Eq3Entry e = eq3_check(ell, opts.budget);
            r.checks.push_back({"eq3 " + params(e.k, ell), e.c_below_bound && e.inner_within_bound && e.chain_steps,
                                "c has " + std::to_string(bit_length(e.c)) + " bits < 2^" +
                                    to_decimal(e.bound_exponent) + "; inner count " +
                                    std::to_string(bit_length(e.inner_count)) + " bits"});
        } catch (const BudgetError& ex) {
            r.checks.push_back({"eq3 ell=" + std::to_string(ell), false, ex.what()});
        }
    }
    return r;
}

SuiteResult run_theorem(unsigned ell_max, const VerifyOptions& opts)
{
    SuiteResult r{"theorem", {}};
    ReportOptions ro;
    ro.budget = opts.budget;
    const Report report = build_report(1, ell_max, ro);
    for (const BoundRow& row : report.rows) {
        std::string detail;
        if (row.error) {
            detail = *row.error;
        } else {
            detail = "n = " + to_decimal(row.n) + ", c has " + std::to_string(bit_length(row.c)) + " bits";
            for (const auto& c : row.checks)
                if (!c.pass)
                    detail += ", failed " + c.name;
        }
        r.checks.push_back({"chain " + params(row.k, row.ell), row.pass(), detail});
    }
    return r;
}

SuiteResult run_embedding(unsigned ell_max)
{
    SuiteResult r{"embedding", {}};
    for (unsigned k = 1; k <= 6; ++k) {
        for (unsigned ell = 0; ell <= ell_max; ++ell) {
            const Gadget t = build_T(k, ell);
            const StructureCertificate cert = certify_structure(t);
            // k >= 2 leaves keep their own 4-faces; k = 1 leaves are bare
            // paths and every bounded face has length 5.
            const bool faces_ok = !cert.min_bounded_face || *cert.min_bounded_face >= 4;
            const bool quad_ok = k == 1 || cert.min_bounded_face == std::optional<std::size_t>(4);
            const bool pass = cert.triangles == 0 && cert.euler && faces_ok && quad_ok &&
                              cert.terminals_non_adjacent && cert.terminals_on_outer_face;
            std::string detail = "V=" + std::to_string(t.graph().vertex_count()) +
                                 " E=" + std::to_string(t.graph().edge_count()) +
                                 " F=" + std::to_string(cert.face_count) + " min bounded face " +
                                 (cert.min_bounded_face ? std::to_string(*cert.min_bounded_face) : "none");
            r.checks.push_back({"embedding " + params(k, ell), pass, detail});
        }
    }
    return r;
}

}  // namespace

Suite parse_suite(std::string_view name)
{
    for (Suite s : kAllSuites)
        if (suite_name(s) == name)
            return s;
    if (name == "all")
        return Suite::all;
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::lemma2: return "lemma2";
    case Suite::remark: return "remark";
    case Suite::lemma3: return "lemma3";
    case Suite::eq3: return "eq3";
    case Suite::theorem: return "theorem";
    case Suite::embedding: return "embedding";
    case Suite::all: return "all";
    }
    return "?";
}

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<SuiteResult> run_verification(Suite suite, const VerifyOptions& opts)
{
    auto ell_for = [&](Suite s) -> unsigned {
        if (opts.ell_max)
            return *opts.ell_max;
        switch (s) {
        case Suite::lemma3: return 2;
        case Suite::embedding: return 4;
        default: return 8;
        }
    };

    std::vector<SuiteResult> out;
    auto run_one = [&](Suite s) {
        switch (s) {
        case Suite::lemma2: out.push_back(run_lemma2()); break;
        case Suite::remark: out.push_back(run_remark()); break;
        case Suite::lemma3: out.push_back(run_lemma3(ell_for(s), opts)); break;
        case Suite::eq3: out.push_back(run_eq3(ell_for(s), opts)); break;
        case Suite::theorem: out.push_back(run_theorem(ell_for(s), opts)); break;
        case Suite::embedding: out.push_back(run_embedding(ell_for(s))); break;
        case Suite::all: break;
        }
    };
    if (suite == Suite::all) {
        if (opts.ell_max && *opts.ell_max == 0)
            throw DomainError("suite 'all' includes lemma3, which requires ell >= 1");
        for (Suite s : kAllSuites)
            run_one(s);
    } else {
        run_one(suite);
    }
    return out;
}

nlohmann::json suites_to_json(const std::vector<SuiteResult>& results)
{
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const SuiteResult& s : results) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : s.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        suites.push_back({{"suite", s.suite}, {"pass", s.pass()}, {"checks", std::move(checks)}});
        all = all && s.pass();
    }
    return {{"pass", all}, {"suites", std::move(suites)}};
}

}  // namespace trifree
