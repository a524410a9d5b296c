// Licensed under the Apache 2.0 license. See LICENSE in the project root.
//
// Test-only reference implementations, deliberately independent of the
// library's computation paths: Floyd-Warshall for distances (vs BFS),
// recursive simple-path enumeration for tiny graphs, and subset-enumeration
// minimum covers (vs greedy / branch-and-bound).
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "laakso/graph.hpp"

namespace oracles {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

/// O(V^3) all-pairs hop counts.
inline std::vector<std::vector<std::int32_t>> floyd_warshall(const laakso::LaaksoGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Shortest path by enumerating every simple path; only for tiny graphs.
inline std::int32_t shortest_by_enumeration(const laakso::LaaksoGraph& g, laakso::VertexId u,
                                            laakso::VertexId v) {
  std::vector<char> used(g.vertex_count(), 0);
  std::int32_t best = kInf;
  auto dfs = [&](auto&& self, laakso::VertexId at, std::int32_t len) -> void {
    if (at == v) {
      best = std::min(best, len);
      return;
    }
    used[at] = 1;
    for (laakso::VertexId nb : g.neighbors(at))
      if (!used[nb]) self(self, nb, len + 1);
    used[at] = 0;
  };
  dfs(dfs, u, 0);
  return best;
}

/// Minimum cover size by enumerating center subsets of growing size.
/// sets[c] lists the target indices candidate c covers.
inline int min_cover_by_enumeration(const std::vector<std::vector<int>>& sets, int universe,
                                    int max_size) {
  std::size_t n = sets.size();
  std::uint64_t full = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  std::vector<std::uint64_t> masks(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (int t : sets[c]) masks[c] |= std::uint64_t{1} << t;

  std::vector<int> combo;
  auto search = [&](auto&& self, std::size_t start, int k, std::uint64_t covered) -> bool {
    if (covered == full) return true;
    if (k == 0) return false;
    for (std::size_t c = start; c < n; ++c) {
      if ((masks[c] & ~covered) == 0) continue;
      if (self(self, c + 1, k - 1, covered | masks[c])) return true;
    }
    return false;
  };
  for (int k = 0; k <= max_size; ++k)
    if (search(search, 0, k, 0)) return k;
  return max_size + 1;
}

/// All endpoint-swapping automorphisms of a small graph, by brute force
/// over vertex permutations.
inline std::vector<std::vector<laakso::VertexId>> endpoint_swapping_automorphisms(
    const laakso::LaaksoGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<laakso::VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<laakso::VertexId>(i);
  std::vector<std::pair<laakso::VertexId, laakso::VertexId>> edges;
  for (const auto& e : g.edges()) edges.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
  std::sort(edges.begin(), edges.end());
  auto [s, t] = g.endpoints();

  std::vector<std::vector<laakso::VertexId>> found;
  do {
    if (perm[s] != t || perm[t] != s) continue;
    bool ok = true;
    for (const auto& [a, b] : edges) {
      auto pa = std::min(perm[a], perm[b]);
      auto pb = std::max(perm[a], perm[b]);
      if (!std::binary_search(edges.begin(), edges.end(), std::pair{pa, pb})) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace oracles
