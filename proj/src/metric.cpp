// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "laakso/errors.hpp"

namespace laakso {

namespace {

void bfs_into(const LaaksoGraph& g, std::span<const VertexId> sources,
              std::span<std::int32_t> dist_out, std::vector<VertexId>& queue) {
  std::fill(dist_out.begin(), dist_out.end(), -1);
  queue.clear();
  for (VertexId s : sources) {
    if (s >= g.vertex_count()) throw std::invalid_argument("bfs: vertex id out of range");
    if (dist_out[s] < 0) {
      dist_out[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    std::int32_t du = dist_out[u];
    for (VertexId v : g.neighbors(u)) {
      if (dist_out[v] < 0) {
        dist_out[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

std::vector<std::int32_t> bfs_hops(const LaaksoGraph& g, VertexId source) {
  VertexId src[1] = {source};
  return bfs_hops(g, std::span<const VertexId>(src, 1));
}

std::vector<std::int32_t> bfs_hops(const LaaksoGraph& g, std::span<const VertexId> sources) {
  std::vector<std::int32_t> d(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, sources, d, queue);
  return d;
}

ScaledDistance dist(const LaaksoGraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw std::invalid_argument("dist: vertex id out of range");
  auto d = bfs_hops(g, u);
  return ScaledDistance::units(d[v], g.unit_exponent());
}

DistanceMatrix all_pairs(const LaaksoGraph& g, std::size_t budget_entries) {
  std::size_t n = g.vertex_count();
  if (n * n > budget_entries)
    throw resource_limit_error("all_pairs: " + std::to_string(n * n) +
                               " entries exceed budget " + std::to_string(budget_entries));
  DistanceMatrix m(n, g.unit_exponent());
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    VertexId src[1] = {s};
    bfs_into(g, std::span<const VertexId>(src, 1), m.row(s), queue);
  }
  return m;
}

ScaledDistance diameter(const LaaksoGraph& g) {
  auto m = all_pairs(g);
  std::int32_t best = 0;
  VertexId bi = 0, bj = 0;
  for (VertexId i = 0; i < m.size(); ++i) {
    auto row = m.row(i);
    for (VertexId j = 0; j < m.size(); ++j) {
      if (row[j] > best) {
        best = row[j];
        bi = i;
        bj = j;
      }
    }
  }
  std::int64_t want = ScaledDistance::pow4(g.unit_exponent());
  if (best != want)
    throw math_check_error("diameter: got " + std::to_string(best) + " units, expected " +
                           std::to_string(want));
  auto [s, t] = g.endpoints();
  if (m.units(s, t) != best)
    throw math_check_error("diameter: not attained by the endpoint pair");
  (void)bi;
  (void)bj;
  return ScaledDistance::units(best, g.unit_exponent());
}

GapCertificate hausdorff_gap(LaaksoFamily& family, int from_level, int to_level) {
  if (from_level >= to_level) throw std::invalid_argument("hausdorff_gap: require from < to");
  const LaaksoGraph& gt = family.graph(to_level);
  auto image = family.image_vertices(from_level, to_level);
  auto d = bfs_hops(gt, image);
  std::int32_t best = -1;
  VertexId witness = 0;
  for (VertexId v = 0; v < gt.vertex_count(); ++v) {
    if (d[v] > best) {
      best = d[v];
      witness = v;
    }
  }
  GapCertificate cert;
  cert.from_level = from_level;
  cert.to_level = to_level;
  cert.max_gap = ScaledDistance::units(best, to_level);
  cert.bound = ScaledDistance::units(ScaledDistance::pow4(to_level - from_level - 1), to_level);
  cert.witness = witness;
  if (cert.max_gap > cert.bound)
    throw math_check_error("hausdorff_gap(" + std::to_string(from_level) + "," +
                           std::to_string(to_level) + "): gap exceeds 4^-(i+1) bound");
  return cert;
}

ScaledDistance gh_upper_bound(LaaksoFamily& family, int from_level, int to_level) {
  GapCertificate cert = hausdorff_gap(family, from_level, to_level);
  ScaledDistance strict = ScaledDistance::units(ScaledDistance::pow4(to_level - from_level), to_level);
  if (!(cert.max_gap < strict))
    throw math_check_error("gh_upper_bound: gap is not strictly below 4^-i");
  return cert.max_gap;
}

}  // namespace laakso
