#pragma once

#include "trifree/bigint.hpp"
#include "trifree/construction.hpp"
#include "trifree/graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace trifree {

/// Colorings of a terminal graph with the terminals fixed to (1,1) (`same`)
/// and to (1,2) (`diff`). Every equal pair behaves like (1,1) and every
/// distinct ordered pair like (1,2), so the total is 3*same + 6*diff.
struct PairCounts {
    BigInt same;
    BigInt diff;
    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

BigInt total_colorings(const PairCounts& pc);

/// Colorings with optional terminal colors pinned, expanded by symmetry.
BigInt colorings_with_terminals(const PairCounts& pc, std::optional<Color> cu, std::optional<Color> cv);

struct BruteForceOptions {
    std::size_t cutoff = 20;
    bool force = false;  // ignore the cutoff
};

/// Exact count of proper 3-colorings extending `fixed` (which may be empty,
/// meaning nothing is fixed). Backtracks over fixed vertices first, then the
/// rest in smallest-last order. Throws DomainError above the cutoff unless
/// forced.
BigInt count_colorings_bruteforce(const Graph& g, const Coloring& fixed = {}, const BruteForceOptions& opts = {});

/// Calls `visit` with every proper total coloring extending `fixed`. No size
/// cutoff: callers bound the work themselves.
void for_each_proper_coloring(const Graph& g, const Coloring& fixed,
                              const std::function<void(const Coloring&)>& visit);

/// Smallest-last (degeneracy) vertex order.
std::vector<Vertex> smallest_last_order(const Graph& g);

/// Colorings of the path interior of P(u,v,b) with psi(u) = cu, psi(v) = cv,
/// by a left-to-right transfer over v1..vb.
BigInt path_interior_count(std::uint64_t b, Color cu, Color cv);

/// (S, D) of P(u,v,b); S == 2 for every b is checked before returning.
PairCounts path_pair_counts(std::uint64_t b);

/// Proper colorings of the P(u,v,5) frame with u = 1 and v in {1, 2}, grouped
/// by which of v1=v3, v2=v4, v3=v5 hold (bit 0, 1, 2 of the mask).
struct FramePatterns {
    /// count[0][mask]: v = 1; count[1][mask]: v = 2.
    std::array<std::array<std::uint32_t, 8>, 2> count{};
};

/// Enumerates all 3^5 assignments of v1..v5 and keeps the proper ones.
const FramePatterns& frame_patterns();

/// Pair counts of a frame whose three 4-faces each hold a gadget with
/// pair counts `child`.
PairCounts compose_frame(const PairCounts& child);

/// (S, D) of T(u,v,k,ell) using ell frame compositions over path_pair_counts(2^k).
PairCounts gadget_pair_counts(unsigned k, unsigned ell);

/// (S, D) of the subgraph of T(u,v,k,ell) induced by its inner set V_ell.
/// Leaf copies collapse to two non-adjacent vertices, so k does not matter.
PairCounts inner_pair_counts(unsigned ell);

struct Lemma2Verdict {
    /// v1=v3, v2=v4, v3=v5, in that order.
    std::array<bool, 3> witness{};
    bool case_b_applies = false;  // psi(u) == psi(v)

    bool case_a_holds() const { return witness[0] || witness[1] || witness[2]; }
    /// v1=v3=v5 and v2=v4.
    bool alternating() const { return witness[0] && witness[1] && witness[2]; }
};

/// `p5` must come from build_P(5). Throws ColoringError for partial or
/// improper psi.
Lemma2Verdict lemma2_classify(const Gadget& p5, const Coloring& psi);

/// Number of ways `psi`, a proper coloring of the V_ell-induced subgraph
/// (entries outside V_ell are ignored), extends to all of the gadget: the
/// product over leaf pairs of path_interior_count(2^k, psi(x), psi(y)).
/// Throws DomainError for ell = 0 and ColoringError for a partial or
/// improper psi.
BigInt count_extensions(const Gadget& t, const Coloring& psi);

/// Worst case of count_extensions over all proper colorings of V_ell, and
/// the largest number of leaf pairs with distinct terminal colors, computed
/// by max-product recursion over the frames.
struct ExtensionExtremes {
    BigInt max_extensions;
    std::uint64_t max_unequal_pairs = 0;
};

ExtensionExtremes extension_extremes(unsigned k, unsigned ell);

}  // namespace trifree
