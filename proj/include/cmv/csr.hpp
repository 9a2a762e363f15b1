#pragma once

#include <span>
#include <vector>

#include "cmv/types.hpp"

namespace cmv {

/**
 * Compressed-sparse-row adjacency matrix of a directed graph.
 *
 * Rows hold strictly increasing, duplicate-free column indices.
 * Immutable after construction; safe for unlimited concurrent readers.
 */
struct CsrGraph {
    VertexId n = 0;
    std::vector<EdgeIndex> row_offsets; // size n+1, row_offsets[0] == 0
    std::vector<VertexId> columns;      // size m, sorted within each row

    EdgeIndex num_edges() const { return columns.size(); }

    std::span<const VertexId> row(VertexId u) const {
        return {columns.data() + row_offsets[u],
                columns.data() + row_offsets[u + 1]};
    }

    VertexId out_degree(VertexId u) const {
        return static_cast<VertexId>(row_offsets[u + 1] - row_offsets[u]);
    }

    /// All edges in (row, column) order.
    std::vector<Edge> edges() const;

    bool operator==(const CsrGraph&) const = default;
};

/// Builds a CsrGraph from an arbitrary edge list. Rows come out sorted,
/// duplicate edges collapse to one, self-loops are kept.
/// Throws std::out_of_range if an endpoint is >= n, naming the offending pair.
CsrGraph build_csr(std::vector<Edge> edges, VertexId n);

/// (u,v) is an edge of the result iff (v,u) is an edge of g.
CsrGraph transpose(const CsrGraph& g);

DegreeVector out_degrees(const CsrGraph& g);

/// y[i] = sum of x[j] over row i; exactly m accumulations. This is the
/// baseline kernel all compressed kernels are checked against.
/// Throws std::invalid_argument on dimension mismatch.
RankVector matvec_csr(const CsrGraph& g, const RankVector& x);

/// In-place variant; x and y must not alias.
void matvec_csr_into(const CsrGraph& g, std::span<const double> x,
                     std::span<double> y);

} // namespace cmv
