#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "cmv/biclique.hpp"
#include "cmv/csr.hpp"
#include "cmv/ref_matvec.hpp"

namespace cmv {

/// What to do with the probability mass sitting on zero-out-degree vertices.
/// kUniform redistributes it uniformly (keeps sum p == 1); kDrop lets it
/// leak, matching a naive implementation.
enum class DanglingPolicy { kUniform, kDrop };

struct PageRankConfig {
    double alpha = 0.15;           // teleport probability, in (0,1)
    std::uint32_t iterations = 10; // power-iteration count
    std::optional<double> l1_tolerance; // early stop when set
    DanglingPolicy dangling = DanglingPolicy::kUniform;
};

/// A representation of A^T able to compute y = A^T * x. Implementations
/// are immutable views; one kernel may serve concurrent products.
class MatvecKernel {
  public:
    virtual ~MatvecKernel() = default;
    virtual VertexId dimension() const = 0;
    virtual void multiply(std::span<const double> x,
                          std::span<double> y) const = 0;
    virtual std::uint64_t adds_per_product() const = 0;
};

class CsrKernel final : public MatvecKernel {
  public:
    explicit CsrKernel(const CsrGraph& transposed) : g_(&transposed) {}
    VertexId dimension() const override { return g_->n; }
    void multiply(std::span<const double> x,
                  std::span<double> y) const override;
    std::uint64_t adds_per_product() const override { return g_->num_edges(); }

  private:
    const CsrGraph* g_;
};

class RefKernel final : public MatvecKernel {
  public:
    explicit RefKernel(const ReferencedMatrix& rm_of_transpose);
    VertexId dimension() const override { return rm_->n; }
    void multiply(std::span<const double> x,
                  std::span<double> y) const override;
    std::uint64_t adds_per_product() const override {
        return rm_->m_prime() + references_used_;
    }

  private:
    const ReferencedMatrix* rm_;
    std::uint64_t references_used_;
};

class BicliqueKernel final : public MatvecKernel {
  public:
    explicit BicliqueKernel(const BicliqueCover& cover_of_transpose)
        : cover_(&cover_of_transpose) {}
    VertexId dimension() const override { return cover_->n; }
    void multiply(std::span<const double> x,
                  std::span<double> y) const override;
    std::uint64_t adds_per_product() const override {
        return cover_->compressed_size();
    }

  private:
    const BicliqueCover* cover_;
};

struct PageRankResult {
    RankVector ranks;
    std::uint32_t iterations_run = 0;
};

/**
 * Power-iteration PageRank.
 *
 * Starting from the uniform distribution (or `start`, which then also acts
 * as the restart distribution), iterates
 *
 *     p_t = alpha * p0 + (1 - alpha) * p_{t-1} * M
 *
 * where p * M is evaluated as A^T * q with q[j] = p[j] / d[j] (q[j] = 0 for
 * dangling j). `at` must represent A^T; `degrees` come from the original,
 * untransposed graph. Stops after cfg.iterations, or earlier once the L1
 * step difference drops to cfg.l1_tolerance when that is set.
 *
 * Throws std::invalid_argument for alpha outside (0,1), zero iterations,
 * an empty graph, dimension mismatches, or a `start` that is not a
 * probability vector.
 */
PageRankResult pagerank(const MatvecKernel& at, const DegreeVector& degrees,
                        const PageRankConfig& cfg,
                        const RankVector* start = nullptr);

/// One-shot comparison of the baseline and differential kernels on the
/// same graph and configuration.
struct PageRankEquivalence {
    double linf = 0.0;              // max |csr - ref| over vertices
    std::uint32_t iterations_run = 0;
    double csr_seconds = 0.0;
    double ref_seconds = 0.0;
    std::uint64_t csr_adds = 0;     // per product
    std::uint64_t ref_adds = 0;     // per product
    CompressionStats compression;   // of the transposed matrix
};

PageRankEquivalence pagerank_equivalence_check(const CsrGraph& g,
                                               const PageRankConfig& cfg,
                                               VertexId window);

} // namespace cmv
