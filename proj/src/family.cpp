// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "laakso/errors.hpp"
#include "laakso/metric.hpp"

namespace laakso {

LaaksoFamily::LaaksoFamily(int cap) : cap_(cap) {
  if (cap < 0 || cap > 10) throw std::invalid_argument("cap must be in [0, 10]");
  cache_.resize(static_cast<std::size_t>(cap) + 1);
}

int LaaksoFamily::env_cap() {
  if (const char* env = std::getenv("LAAKSO_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 10)
      throw std::invalid_argument("LAAKSO_CAP must be an integer in [0, 10]");
    return static_cast<int>(v);
  }
  return kDefaultCap;
}

void LaaksoFamily::check_level(int level) const {
  if (level < 0) throw std::invalid_argument("negative level");
  if (level > cap_)
    throw resource_limit_error("level " + std::to_string(level) + " exceeds cap " +
                               std::to_string(cap_) + " (set LAAKSO_CAP to raise)");
}

const LaaksoGraph& LaaksoFamily::graph(int level) {
  check_level(level);
  if (!cache_[level]) {
    // Build the whole chain up to `level` so refinements are cheap later.
    for (int i = 0; i <= level; ++i) {
      if (!cache_[i]) cache_[i] = std::make_unique<const LaaksoGraph>(LaaksoGraph::build(i));
    }
  }
  return *cache_[level];
}

Point LaaksoFamily::point(int level, std::string_view label) {
  return {level, graph(level).require(label)};
}

const std::string& LaaksoFamily::label(const Point& p) { return graph(p.level).label(p.vertex); }

bool LaaksoFamily::same_point(const Point& a, const Point& b) {
  return label(a) == label(b);
}

Point LaaksoFamily::lift(const Point& p, int to_level) {
  if (to_level < p.level)
    throw std::invalid_argument("lift: target level " + std::to_string(to_level) +
                                " is above point level " + std::to_string(p.level));
  if (to_level == p.level) return p;
  return {to_level, graph(to_level).require(label(p))};
}

RefinementMap LaaksoFamily::refine(int from_level, int to_level) {
  if (from_level >= to_level) throw std::invalid_argument("refine: require from < to");
  check_level(to_level);
  const LaaksoGraph& gf = graph(from_level);
  const LaaksoGraph& gt = graph(to_level);
  RefinementMap m;
  m.from_level = from_level;
  m.to_level = to_level;
  m.vertex_map.reserve(gf.vertex_count());
  for (VertexId v = 0; v < gf.vertex_count(); ++v) m.vertex_map.push_back(gt.require(gf.label(v)));
  m.image_vertices = image_vertices(from_level, to_level);
  return m;
}

std::vector<VertexId> LaaksoFamily::image_vertices(int from_level, int to_level) {
  if (from_level >= to_level) throw std::invalid_argument("image_vertices: require from < to");
  check_level(to_level);
  const LaaksoGraph& gf = graph(from_level);
  const LaaksoGraph& gt = graph(to_level);

  // Path edges as label triples (a, b, copy address), expanded one level at
  // a time through the upper branch of each substituted square.
  struct PathEdge {
    std::string a, b, addr;
  };
  std::vector<PathEdge> cur;
  cur.reserve(gf.edge_count());
  for (const auto& e : gf.edges()) cur.push_back({gf.label(e.a), gf.label(e.b), e.address});
  for (int lev = from_level; lev < to_level; ++lev) {
    std::vector<PathEdge> next;
    next.reserve(cur.size() * 4);
    for (const auto& pe : cur) {
      const std::string b = pe.addr + "b", u = pe.addr + "u", c = pe.addr + "c";
      next.push_back({pe.a, b, pe.addr + "0"});
      next.push_back({b, u, pe.addr + "1"});
      next.push_back({u, c, pe.addr + "2"});
      next.push_back({c, pe.b, pe.addr + "5"});
    }
    cur = std::move(next);
  }

  std::vector<char> seen(gt.vertex_count(), 0);
  std::vector<VertexId> out;
  for (const auto& pe : cur) {
    for (const std::string* l : {&pe.a, &pe.b}) {
      VertexId v = gt.require(*l);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScaledDistance LaaksoFamily::point_dist(const Point& a, const Point& b) {
  int common = std::max(a.level, b.level);
  Point la = lift(a, common);
  Point lb = lift(b, common);
  return dist(graph(common), la.vertex, lb.vertex);
}

}  // namespace laakso
