#include "trifree/counting.hpp"

#include "trifree/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace trifree {

BigInt total_colorings(const PairCounts& pc) { return 3 * pc.same + 6 * pc.diff; }

BigInt colorings_with_terminals(const PairCounts& pc, std::optional<Color> cu, std::optional<Color> cv)
{
    for (auto c : {cu, cv})
        if (c && (*c < 1 || *c > kNumColors))
            throw DomainError("terminal color must be 1, 2 or 3");
    if (cu && cv)
        return *cu == *cv ? pc.same : pc.diff;
    if (cu || cv)
        return pc.same + 2 * pc.diff;
    return total_colorings(pc);
}

std::vector<Vertex> smallest_last_order(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            queue.emplace(--deg[w], w);
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

namespace {

/// Backtracking state shared by counting and enumeration.
class Search {
public:
    Search(const Graph& g, const Coloring& fixed) : n_(g.vertex_count()), current_(g.vertex_count())
    {
        if (fixed.size() != 0 && fixed.size() != n_)
            throw ColoringError("fixed coloring size does not match vertex count");

        std::vector<Vertex> order;
        std::vector<char> placed(n_, 0);
        if (fixed.size() != 0)
            for (Vertex v = 0; v < n_; ++v)
                if (fixed.assigned(v)) {
                    order.push_back(v);
                    placed[v] = 1;
                }
        for (Vertex v : smallest_last_order(g))
            if (!placed[v])
                order.push_back(v);

        std::vector<std::uint32_t> position(n_);
        for (std::uint32_t p = 0; p < n_; ++p)
            position[order[p]] = p;
        vertex_ = order;
        earlier_.resize(n_);
        choice_.resize(n_, 0);
        for (std::uint32_t p = 0; p < n_; ++p) {
            for (Vertex w : g.neighbors(order[p]))
                if (position[w] < p)
                    earlier_[p].push_back(position[w]);
            if (fixed.size() != 0)
                if (auto c = fixed.get(order[p]))
                    choice_[p] = *c;
        }
        color_.assign(n_, 0);
    }

    std::uint64_t count() { return count_from(0); }

    void enumerate(const std::function<void(const Coloring&)>& visit) { enumerate_from(0, visit); }

private:
    bool allowed(std::uint32_t p, Color c) const
    {
        for (std::uint32_t q : earlier_[p])
            if (color_[q] == c)
                return false;
        return true;
    }

    std::uint64_t count_from(std::uint32_t p)
    {
        if (p == n_)
            return 1;
        std::uint64_t total = 0;
        const Color lo = choice_[p] ? choice_[p] : 1;
        const Color hi = choice_[p] ? choice_[p] : kNumColors;
        for (Color c = lo; c <= hi; ++c) {
            if (!allowed(p, c))
                continue;
            if (p + 1 == n_) {
                ++total;
                continue;
            }
            color_[p] = c;
            total += count_from(p + 1);
        }
        color_[p] = 0;
        return total;
    }

    void enumerate_from(std::uint32_t p, const std::function<void(const Coloring&)>& visit)
    {
        if (p == n_) {
            visit(current_);
            return;
        }
        const Color lo = choice_[p] ? choice_[p] : 1;
        const Color hi = choice_[p] ? choice_[p] : kNumColors;
        for (Color c = lo; c <= hi; ++c) {
            if (!allowed(p, c))
                continue;
            color_[p] = c;
            current_.assign(vertex_[p], c);
            enumerate_from(p + 1, visit);
        }
        color_[p] = 0;
        current_.clear(vertex_[p]);
    }

    std::size_t n_;
    std::vector<Vertex> vertex_;
    std::vector<std::vector<std::uint32_t>> earlier_;
    std::vector<Color> choice_;
    std::vector<Color> color_;
    Coloring current_;
};

}  // namespace

BigInt count_colorings_bruteforce(const Graph& g, const Coloring& fixed, const BruteForceOptions& opts)
{
    if (!opts.force && g.vertex_count() > opts.cutoff)
        throw DomainError("brute-force count refused: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the cutoff of " + std::to_string(opts.cutoff) + " (use force)");
    Search search(g, fixed);
    return BigInt(static_cast<unsigned long>(search.count()));
}

void for_each_proper_coloring(const Graph& g, const Coloring& fixed,
                              const std::function<void(const Coloring&)>& visit)
{
    Search search(g, fixed);
    search.enumerate(visit);
}

BigInt path_interior_count(std::uint64_t b, Color cu, Color cv)
{
    if (b == 0)
        throw DomainError("P(u,v,b) requires b >= 1");
    if (cu < 1 || cu > kNumColors || cv < 1 || cv > kNumColors)
        throw DomainError("terminal color must be 1, 2 or 3");
    // ways[c-1]: colorings of v1..vi with vi colored c.
    std::array<BigInt, 3> ways;
    for (Color c = 1; c <= kNumColors; ++c)
        ways[c - 1] = c != cu ? 1 : 0;
    for (std::uint64_t i = 2; i <= b; ++i) {
        const Color forbidden = (i % 2 == 1) ? cu : cv;
        const BigInt sum = ways[0] + ways[1] + ways[2];
        std::array<BigInt, 3> next;
        for (Color c = 1; c <= kNumColors; ++c)
            next[c - 1] = c == forbidden ? BigInt(0) : BigInt(sum - ways[c - 1]);
        ways = std::move(next);
    }
    return ways[0] + ways[1] + ways[2];
}

PairCounts path_pair_counts(std::uint64_t b)
{
    PairCounts pc{path_interior_count(b, 1, 1), path_interior_count(b, 1, 2)};
    if (pc.same != 2)
        throw std::logic_error("P(u,v," + std::to_string(b) + ") has " + to_decimal(pc.same) +
                               " colorings with u = v = 1, expected 2");
    return pc;
}

const FramePatterns& frame_patterns()
{
    static const FramePatterns patterns = [] {
        FramePatterns fp;
        const Gadget p5 = build_P(5);
        Coloring psi(7);
        psi.assign(frame::u, 1);
        for (int vcase = 0; vcase < 2; ++vcase) {
            psi.assign(frame::v, static_cast<Color>(vcase + 1));
            for (int code = 0; code < 243; ++code) {
                int rest = code;
                for (unsigned i = 1; i <= 5; ++i) {
                    psi.assign(frame::path(i), static_cast<Color>(rest % 3 + 1));
                    rest /= 3;
                }
                if (!is_proper(p5.graph(), psi))
                    continue;
                const Lemma2Verdict verdict = lemma2_classify(p5, psi);
                unsigned mask = 0;
                for (unsigned j = 0; j < 3; ++j)
                    mask |= verdict.witness[j] ? (1u << j) : 0u;
                ++fp.count[vcase][mask];
            }
        }
        return fp;
    }();
    return patterns;
}

PairCounts compose_frame(const PairCounts& child)
{
    const FramePatterns& fp = frame_patterns();
    std::array<BigInt, 2> out{0, 0};
    for (int vcase = 0; vcase < 2; ++vcase)
        for (unsigned mask = 0; mask < 8; ++mask) {
            if (fp.count[vcase][mask] == 0)
                continue;
            BigInt term = fp.count[vcase][mask];
            for (unsigned j = 0; j < 3; ++j)
                term *= (mask >> j) & 1u ? child.same : child.diff;
            out[vcase] += term;
        }
    return {out[0], out[1]};
}

PairCounts gadget_pair_counts(unsigned k, unsigned ell)
{
    if (k == 0)
        throw DomainError("T(u,v,k,ell) requires k >= 1");
    PairCounts pc = path_pair_counts(std::uint64_t{1} << k);
    for (unsigned level = 0; level < ell; ++level)
        pc = compose_frame(pc);
    return pc;
}

PairCounts inner_pair_counts(unsigned ell)
{
    PairCounts pc{1, 1};
    for (unsigned level = 0; level < ell; ++level)
        pc = compose_frame(pc);
    return pc;
}

Lemma2Verdict lemma2_classify(const Gadget& p5, const Coloring& psi)
{
    if (p5.params.k || p5.params.b != 5)
        throw DomainError("lemma2_classify expects the gadget P(u,v,5)");
    if (!is_proper(p5.graph(), psi))
        throw ColoringError("lemma2_classify: coloring is not proper");
    auto at = [&](unsigned i) { return psi.at(frame::path(i)); };
    Lemma2Verdict verdict;
    verdict.witness = {at(1) == at(3), at(2) == at(4), at(3) == at(5)};
    verdict.case_b_applies = psi.at(frame::u) == psi.at(frame::v);
    return verdict;
}

BigInt count_extensions(const Gadget& t, const Coloring& psi)
{
    if (!t.params.k)
        throw DomainError("count_extensions expects a T(u,v,k,ell) gadget");
    if (t.params.ell == 0)
        throw DomainError("count_extensions requires ell >= 1");
    const Graph& g = t.graph();
    if (psi.size() != g.vertex_count())
        throw ColoringError("coloring size does not match the gadget");

    std::vector<char> inner(g.vertex_count(), 0);
    for (Vertex v : t.registry.inner_set) {
        if (!psi.assigned(v))
            throw ColoringError("coloring of V_ell is partial: vertex " + g.label(v) + " is unassigned");
        inner[v] = 1;
    }
    for (const Edge& e : g.edges())
        if (inner[e.a] && inner[e.b] && psi.at(e.a) == psi.at(e.b))
            throw ColoringError("coloring of V_ell is improper at edge " + g.label(e.a) + "-" + g.label(e.b));

    std::array<std::optional<BigInt>, 9> per_pair;
    BigInt product = 1;
    for (const auto& [x, y] : t.registry.pairs) {
        const Color cx = psi.at(x), cy = psi.at(y);
        auto& slot = per_pair[(cx - 1) * 3 + (cy - 1)];
        if (!slot)
            slot = path_interior_count(t.registry.leaf_b, cx, cy);
        product *= *slot;
    }
    return product;
}

ExtensionExtremes extension_extremes(unsigned k, unsigned ell)
{
    if (k == 0)
        throw DomainError("T(u,v,k,ell) requires k >= 1");
    const std::uint64_t b = std::uint64_t{1} << k;
    // index 0: terminals equal; 1: terminals distinct
    std::array<BigInt, 2> ext{path_interior_count(b, 1, 1), path_interior_count(b, 1, 2)};
    std::array<std::uint64_t, 2> unequal{0, 1};

    const FramePatterns& fp = frame_patterns();
    for (unsigned level = 0; level < ell; ++level) {
        std::array<BigInt, 2> next_ext{0, 0};
        std::array<std::uint64_t, 2> next_unequal{0, 0};
        for (int vcase = 0; vcase < 2; ++vcase)
            for (unsigned mask = 0; mask < 8; ++mask) {
                if (fp.count[vcase][mask] == 0)
                    continue;
                BigInt e = 1;
                std::uint64_t d = 0;
                for (unsigned j = 0; j < 3; ++j) {
                    const int child = (mask >> j) & 1u ? 0 : 1;
                    e *= ext[child];
                    d += unequal[child];
                }
                next_ext[vcase] = std::max(next_ext[vcase], e);
                next_unequal[vcase] = std::max(next_unequal[vcase], d);
            }
        ext = std::move(next_ext);
        unequal = next_unequal;
    }
    return {std::max(ext[0], ext[1]), std::max(unequal[0], unequal[1])};
}

}  // namespace trifree
