#pragma once

#include <span>
#include <vector>

#include "cmv/csr.hpp"

namespace cmv {

/// Sentinel reference for rows stored verbatim.
inline constexpr VertexId kNoRef = static_cast<VertexId>(-1);

/**
 * Differential row representation of a binary matrix.
 *
 * Row i is either self-coded (refs[i] == kNoRef, columns in plus_row(i))
 * or expressed against an earlier row refs[i] < i: plus_row(i) holds the
 * columns to add and minus_row(i) the columns of the reference row to drop.
 *
 * Invariants:
 *   - refs[i] == kNoRef or refs[i] < i
 *   - plus_row(i) and minus_row(i) are sorted, strict, disjoint, with
 *     every column < n
 *   - refs[i] == kNoRef implies minus_row(i) is empty
 *
 * Immutable after construction; safe for concurrent readers.
 */
struct ReferencedMatrix {
    VertexId n = 0;
    std::vector<VertexId> refs;
    std::vector<EdgeIndex> plus_offsets;  // size n+1
    std::vector<VertexId> plus_columns;
    std::vector<EdgeIndex> minus_offsets; // size n+1
    std::vector<VertexId> minus_columns;

    /// Total differential nonzero count (+1 and -1 entries together).
    EdgeIndex m_prime() const {
        return plus_columns.size() + minus_columns.size();
    }

    std::span<const VertexId> plus_row(VertexId i) const {
        return {plus_columns.data() + plus_offsets[i],
                plus_columns.data() + plus_offsets[i + 1]};
    }

    std::span<const VertexId> minus_row(VertexId i) const {
        return {minus_columns.data() + minus_offsets[i],
                minus_columns.data() + minus_offsets[i + 1]};
    }

    bool operator==(const ReferencedMatrix&) const = default;
};

/// Checks every structural invariant above; throws std::invalid_argument
/// on the first violation.
void validate(const ReferencedMatrix& rm);

/**
 * Builds the differential representation of g.
 *
 * For each row i the candidate references are the rows in
 * [max(0, i - window), i). The chosen reference minimizes the size of the
 * symmetric difference with row i; ties go to the nearest (largest index)
 * candidate. A row is kept verbatim when the best difference is not
 * strictly smaller than the row itself.
 *
 * Throws std::invalid_argument if window < 1.
 */
ReferencedMatrix compress(const CsrGraph& g, VertexId window);

/// Row i of the source matrix, rebuilt by unwinding the reference chain.
/// Throws std::out_of_range if i >= n.
std::vector<VertexId> reconstruct_row(const ReferencedMatrix& rm, VertexId i);

/// Rebuilds the whole source graph (all rows, in one forward pass).
CsrGraph reconstruct_graph(const ReferencedMatrix& rm);

struct CompressionStats {
    VertexId n = 0;
    EdgeIndex m = 0;
    EdgeIndex m_prime = 0;
    double ratio = 1.0;             // m / m_prime
    bool ratio_by_convention = false; // true when m_prime == 0 (ratio fixed at 1.0)
    VertexId rows_self_coded = 0;   // rows with refs[i] == kNoRef
    VertexId max_chain = 0;         // longest reference chain
};

/// Summary of rm against its source graph g.
CompressionStats stats(const ReferencedMatrix& rm, const CsrGraph& g);

} // namespace cmv
