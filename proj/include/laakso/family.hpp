// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "laakso/graph.hpp"
#include "laakso/scaled.hpp"

namespace laakso {

/// A vertex of X_level, standing for its equivalence class in the limit
/// space. Two points are the same point of the limit space iff their labels
/// agree (labels are global names), equivalently iff their lifts to any
/// common level coincide.
struct Point {
  std::int32_t level = 0;
  VertexId vertex = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// The canonical isometric embedding of X_from into X_to. Vertices keep
/// their labels; each edge of X_from is realized in X_to by the
/// endpoint-to-endpoint path through the upper side of every substituted
/// square, which is what image_vertices() enumerates.
struct RefinementMap {
  int from_level = 0;
  int to_level = 0;
  std::vector<VertexId> vertex_map;    // X_from id -> X_to id
  std::vector<VertexId> image_vertices;  // all X_to vertices on the image paths
};

/// Builds and caches X_0..X_cap plus their refinement structure. Graphs are
/// immutable once built; all hand-outs are references into the cache.
class LaaksoFamily {
 public:
  static constexpr int kDefaultCap = 6;

  explicit LaaksoFamily(int cap = kDefaultCap);

  /// Reads LAAKSO_CAP from the environment, falling back to kDefaultCap.
  static int env_cap();

  int cap() const { return cap_; }

  const LaaksoGraph& graph(int level);

  Point point(int level, std::string_view label);
  const std::string& label(const Point& p);
  bool same_point(const Point& a, const Point& b);

  /// Canonical representative of p's class at a deeper level (identity on
  /// labels). lift(p, p.level) == p; lift is functorial.
  Point lift(const Point& p, int to_level);

  RefinementMap refine(int from_level, int to_level);

  /// Vertices of X_to lying on the canonical continuum image of X_from.
  std::vector<VertexId> image_vertices(int from_level, int to_level);

  /// Geodesic distance between classes, computed at the finer of the two
  /// levels (refinements are isometric, so any common level agrees).
  ScaledDistance point_dist(const Point& a, const Point& b);

 private:
  void check_level(int level) const;

  int cap_;
  std::vector<std::unique_ptr<const LaaksoGraph>> cache_;
};

}  // namespace laakso
