#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "cmv/ref_matrix.hpp"

namespace cmv {

/// Work accounting for one compressed product.
/// For the differential kernel, adds == m_prime + references_used.
struct OpCount {
    std::uint64_t adds = 0;            // scalar additions/subtractions
    std::uint64_t references_used = 0; // rows with refs[i] != kNoRef

    bool operator==(const OpCount&) const = default;
};

/**
 * y = A * x evaluated on the differential representation.
 *
 * Rows are processed in increasing index order; row i accumulates its
 * plus entries (ascending), then its minus entries (ascending), into one
 * scalar, then adds y[refs[i]] (0 when self-coded). Since refs[i] < i the
 * reference result is always available. The row loop is inherently
 * sequential; independent products over the same matrix may run
 * concurrently.
 */
OpCount matvec_ref_into(const ReferencedMatrix& rm, std::span<const double> x,
                        std::span<double> y);

/// Allocating wrapper. Throws std::invalid_argument on dimension mismatch.
std::pair<RankVector, OpCount> matvec_ref(const ReferencedMatrix& rm,
                                          const RankVector& x);

/// Left product x * A, evaluated as (A^T) * x on a representation built
/// from transpose(g). This is the product shape the PageRank recurrence
/// consumes.
std::pair<RankVector, OpCount> matvec_ref_left(
    const ReferencedMatrix& rm_of_transpose, const RankVector& x);

} // namespace cmv
