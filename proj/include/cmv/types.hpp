#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cmv {

/// 0-based vertex index, strictly less than the graph's vertex count n.
using VertexId = std::uint32_t;

/// Index into concatenated per-row column arrays (can exceed 32 bits).
using EdgeIndex = std::uint64_t;

/// Directed edge (source, target).
using Edge = std::pair<VertexId, VertexId>;

/// Dense real vector of length n (probability vector p_t or generic x).
using RankVector = std::vector<double>;

/// Per-vertex out-degrees of a graph; sums to its edge count m.
using DegreeVector = std::vector<std::uint32_t>;

} // namespace cmv
