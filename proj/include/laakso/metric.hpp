// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laakso/family.hpp"
#include "laakso/graph.hpp"
#include "laakso/scaled.hpp"

namespace laakso {

/// Hop counts from one or several sources; every edge has unit length, so
/// BFS is the exact geodesic computation.
std::vector<std::int32_t> bfs_hops(const LaaksoGraph& g, VertexId source);
std::vector<std::int32_t> bfs_hops(const LaaksoGraph& g, std::span<const VertexId> sources);

/// Geodesic distance between two vertices of one graph.
ScaledDistance dist(const LaaksoGraph& g, VertexId u, VertexId v);

/// Dense all-pairs distances in integer units of 4^{-unit_exponent}.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, int unit_exponent)
      : n_(n), unit_exponent_(unit_exponent), units_(n * n, -1) {}

  std::size_t size() const { return n_; }
  int unit_exponent() const { return unit_exponent_; }
  std::int32_t units(VertexId i, VertexId j) const { return units_[std::size_t(i) * n_ + j]; }
  std::span<const std::int32_t> row(VertexId i) const { return {units_.data() + std::size_t(i) * n_, n_}; }
  std::span<std::int32_t> row(VertexId i) { return {units_.data() + std::size_t(i) * n_, n_}; }
  ScaledDistance at(VertexId i, VertexId j) const {
    return ScaledDistance::units(units(i, j), unit_exponent_);
  }

 private:
  std::size_t n_;
  int unit_exponent_;
  std::vector<std::int32_t> units_;
};

/// Per-source BFS over all vertices. Refuses instances whose matrix would
/// exceed `budget_entries` (default 10^8 entries).
DistanceMatrix all_pairs(const LaaksoGraph& g, std::size_t budget_entries = 100'000'000);

/// Maximum pairwise distance; the construction guarantees it equals 1
/// (4^level units) and is attained by the endpoint pair, and this is
/// checked before returning.
ScaledDistance diameter(const LaaksoGraph& g);

/// One-sided Hausdorff gap of the canonical image of X_from inside X_to,
/// with the construction's bound 4^{-(from+1)}.
struct GapCertificate {
  int from_level = 0;
  int to_level = 0;
  ScaledDistance max_gap;
  ScaledDistance bound;
  VertexId witness = 0;  // vertex of X_to attaining max_gap
};

/// max over vertices v of X_to of dist(v, canonical image of X_from).
/// Throws math_check_error if the bound 4^{-(from+1)} ever failed.
GapCertificate hausdorff_gap(LaaksoFamily& family, int from_level, int to_level);

/// The gap value read as a one-sided Gromov-Hausdorff upper bound; checks
/// the strict bound 4^{-from}.
ScaledDistance gh_upper_bound(LaaksoFamily& family, int from_level, int to_level);

}  // namespace laakso
