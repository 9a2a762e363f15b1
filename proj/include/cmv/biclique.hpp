#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cmv/csr.hpp"
#include "cmv/ref_matvec.hpp"

namespace cmv {

/// Complete directed bipartite edge set sources x targets.
struct Biclique {
    std::vector<VertexId> sources; // sorted ascending
    std::vector<VertexId> targets; // sorted ascending

    bool operator==(const Biclique&) const = default;
};

/**
 * Edge-disjoint decomposition of a graph's edge set into bicliques plus a
 * residual edge list. The biclique edge sets and the residual are pairwise
 * disjoint and their union is exactly E.
 */
struct BicliqueCover {
    VertexId n = 0;
    std::vector<Biclique> bicliques; // emission order
    std::vector<Edge> residual;      // sorted

    /// sum of (|S_r| + |C_r|) plus the residual count; the cost of one product.
    std::uint64_t compressed_size() const;

    bool operator==(const BicliqueCover&) const = default;
};

/// y = A * x on the cover: per biclique, c_r = sum of x over targets is
/// added to y[i] for every source i; residual edges contribute x[j] to y[i].
/// OpCount.adds == compressed_size().
OpCount matvec_biclique_into(const BicliqueCover& cover,
                             std::span<const double> x, std::span<double> y);

std::pair<RankVector, OpCount> matvec_biclique(const BicliqueCover& cover,
                                               const RankVector& x);

inline constexpr std::uint64_t kUnboundedRounds =
    std::numeric_limits<std::uint64_t>::max();

/**
 * Greedy biclique extraction.
 *
 * Each round buckets rows by hashes of their remaining adjacency sets,
 * intersects bucketed row pairs to propose a shared target set, expands the
 * source side to every row still containing it, and emits the candidate
 * with the best gain |S|*|C| - |S| - |C|. Stops when no candidate gains at
 * least min_gain or after max_rounds. Remaining edges become residual.
 * Deterministic; no optimality claim.
 */
BicliqueCover extract_greedy(const CsrGraph& g, std::uint64_t min_gain = 1,
                             std::uint64_t max_rounds = kUnboundedRounds);

/// True iff the biclique edge sets and residual are pairwise disjoint and
/// their union equals g's edge set exactly.
bool verify_cover(const BicliqueCover& cover, const CsrGraph& g);

// Text container: "BCV1 n" header, then per biclique a "B k" line, a line
// of k source ids and a line of the target count followed by the target
// ids; then an "R" line and one "u v" line per residual edge. Ids ascending,
// bicliques in emission order.
void save_cover(const BicliqueCover& cover, std::ostream& out);
void save_cover(const BicliqueCover& cover, const std::string& path);
BicliqueCover load_cover(std::istream& in);
BicliqueCover load_cover(const std::string& path);

} // namespace cmv
