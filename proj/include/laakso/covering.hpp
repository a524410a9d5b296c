// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laakso/graph.hpp"
#include "laakso/metric.hpp"
#include "laakso/scaled.hpp"

namespace laakso {

/// Closed ball {v : dist(center, v) <= r}, as vertex ids in ascending order.
/// r may have any unit exponent; the comparison is exact.
std::vector<VertexId> ball(const LaaksoGraph& g, const DistanceMatrix& m, VertexId center,
                           ScaledDistance r);

/// Cover `target` by closed radius-balls centered at `candidate_centers`.
struct CoverProblem {
  const LaaksoGraph* graph = nullptr;
  const DistanceMatrix* matrix = nullptr;
  std::vector<VertexId> target;
  ScaledDistance radius;
  std::vector<VertexId> candidate_centers;  // empty = all vertices
};

struct CoverResult {
  std::vector<VertexId> centers;
  bool exact = false;          // true when the size is the proven minimum
  std::uint64_t work = 0;      // branch-and-bound nodes visited
};

/// Largest-first greedy; ties break toward the smallest vertex id, so the
/// result is deterministic. Throws std::invalid_argument if the candidates
/// cannot cover the target at all.
CoverResult greedy_cover(const CoverProblem& problem);

/// Exact minimum cover by branch and bound, warm-started from greedy.
/// Falls back to the greedy result flagged inexact when `work_limit` nodes
/// are exhausted.
CoverResult min_cover_exact(const CoverProblem& problem, std::uint64_t work_limit = 10'000'000);

struct DoublingEntry {
  VertexId center = 0;
  ScaledDistance radius;  // r; the cover uses radius r/2
  int cover_size = 0;
  bool exact = false;
};

/// N(B(x, r), r/2) for every vertex x and every listed radius r = 4^{-m}.
struct DoublingReport {
  int level = 0;
  std::vector<DoublingEntry> entries;
  int max_cover_size = 0;
};

/// radius_exponents lists the m in r = 4^{-m}; m <= level is required so r
/// is a whole number of edges. Covers are exact unless an instance blows
/// the work limit, in which case its greedy size is recorded inexact.
DoublingReport doubling_report(const LaaksoGraph& g, const DistanceMatrix& m,
                               const std::vector<int>& radius_exponents,
                               std::uint64_t work_limit = 10'000'000);

struct HomogeneitySample {
  int big_exponent = 0;    // R = 4^{-big_exponent}
  int small_exponent = 0;  // rho = 4^{-small_exponent}
  int count = 0;           // worst-case N(A n B(x,R), rho) over centers x
  VertexId worst_center = 0;
  bool whole_space = false;  // R >= diameter: the ball is all of A for every x
  bool exact = false;
};

/// Least-squares fit of log N against log(R/rho).
struct HomogeneityFit {
  std::vector<HomogeneitySample> samples;
  double exponent_s = 0.0;
  double constant_M = 0.0;
  double residual = 0.0;  // RMS in log space
};

/// Scale pairs (m1, m2) mean (R, rho) = (4^{-m1}, 4^{-m2}), m1 < m2.
/// `subset` restricts the covered set A (empty = whole vertex set); centers
/// of covering balls always range over all vertices. At least 3 pairs are
/// required and the ratios must not all coincide.
HomogeneityFit assouad_fit(const LaaksoGraph& g, const DistanceMatrix& m,
                           const std::vector<std::pair<int, int>>& scale_pairs,
                           const std::vector<VertexId>& subset = {});

/// The default series (R = 1, rho = 4^{-m}): m = 1..level-1 for level >= 4,
/// m = 1..level below that. Matches the self-similar count growth and keeps
/// clear of vertex-scale discretization.
std::vector<std::pair<int, int>> default_scale_pairs(int level);

/// Inclusion-maximal subset of `target` with pairwise distance >= min_sep,
/// greedily built in id order. Any such set covers the target at radius
/// min_sep and lower-bounds covering numbers at smaller radii.
std::vector<VertexId> greedy_separated_subset(const DistanceMatrix& m,
                                              const std::vector<VertexId>& target,
                                              ScaledDistance min_sep);

}  // namespace laakso
