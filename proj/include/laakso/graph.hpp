// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace laakso {

using VertexId = std::uint32_t;

/// An edge of X_i, oriented from the start-endpoint side of the pattern edge
/// it descends from. `address` is the edge's base-6 word: the chain of copy
/// indices selecting it, one digit per level (|address| == level).
struct Edge {
  VertexId a = 0;  // start side
  VertexId b = 0;  // end side
  std::string address;
};

/// A finest-scale 4-edge square. Corners are listed in cycle order
/// (junction, side, junction, side) = (Kb, Ku, Kc, Kl) for the square with
/// copy address K; junctions have degree 3 in the ambient graph, sides
/// degree 2, and no vertex lies in two squares.
struct EdgeCycle {
  std::array<VertexId, 4> corners{};       // b, u, c, l
  std::array<std::uint32_t, 4> member_edges{};  // b-u, u-c, c-l, l-b
  std::string address;                     // copy address K, length level-1
};

/// The level-i Laakso graph: 6^i unit edges of length 4^{-i}, built by
/// substituting a copy of X_{i-1} for each edge of the 6-edge pattern
/// (tail, 4-cycle, tail). Vertices carry stable string labels:
///   "s", "t"                      the two endpoints (degree 1), and
///   "<digits><letter>"            an interior vertex, digits in 0..5
///                                 addressing nested copies, letter in
///                                 {b,u,l,c} naming a pattern vertex.
/// Labels are global names: the same label denotes the same point of the
/// limit space at every level where it exists, which makes refinement maps
/// the identity on labels.
class LaaksoGraph {
 public:
  /// Build X_level. No cap is applied here; LaaksoFamily enforces one.
  static LaaksoGraph build(int level);

  int level() const { return level_; }
  /// Edge length is 4^{-unit_exponent()}.
  int unit_exponent() const { return level_; }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find(), but throws std::invalid_argument for unknown labels.
  VertexId require(std::string_view label) const;

  std::pair<VertexId, VertexId> endpoints() const { return endpoints_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  int degree(VertexId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  const std::vector<EdgeCycle>& edge_cycles() const { return cycles_; }

 private:
  LaaksoGraph() = default;
  static LaaksoGraph base();
  static LaaksoGraph extend(const LaaksoGraph& child);
  void finish();  // index labels, build adjacency

  int level_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::pair<VertexId, VertexId> endpoints_{0, 0};
  std::vector<EdgeCycle> cycles_;
};

/// The mirror automorphism exchanging the two endpoints: s<->t, every copy
/// digit 0<->5, 1<->2, 3<->4, terminal b<->c (u, l fixed). Returned as a
/// vertex permutation; it is an involution and preserves the edge set.
std::vector<VertexId> endpoint_involution(const LaaksoGraph& g);

/// Applies the involution's label rewriting to a single label.
std::string involute_label(std::string_view label);

/// Exact counts implied by the construction, used as structural checks.
std::int64_t expected_edge_count(int level);        // 6^level
std::int64_t expected_vertex_count(int level);      // (4*6^level + 6) / 5
std::int64_t expected_degree3_count(int level);     // 2*(6^level - 1) / 5
std::int64_t expected_cycle_count(int level);       // 6^{level-1}, 0 at level 0

}  // namespace laakso
