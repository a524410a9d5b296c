// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "laakso/errors.hpp"

namespace laakso {

namespace {

// Pattern edges in canonical order; each is substituted by copy k at the
// next level. Edges 1,2 form the upper square side, 3,4 the lower.
constexpr std::array<std::pair<const char*, const char*>, 6> kPattern = {{
    {"s", "b"}, {"b", "u"}, {"u", "c"}, {"b", "l"}, {"l", "c"}, {"c", "t"},
}};

bool is_endpoint_label(const std::string& l) { return l == "s" || l == "t"; }

}  // namespace

std::int64_t expected_edge_count(int level) {
  std::int64_t e = 1;
  for (int i = 0; i < level; ++i) e *= 6;
  return e;
}

std::int64_t expected_vertex_count(int level) {
  return (4 * expected_edge_count(level) + 6) / 5;
}

std::int64_t expected_degree3_count(int level) {
  return 2 * (expected_edge_count(level) - 1) / 5;
}

std::int64_t expected_cycle_count(int level) {
  return level >= 1 ? expected_edge_count(level - 1) : 0;
}

LaaksoGraph LaaksoGraph::base() {
  LaaksoGraph g;
  g.level_ = 0;
  g.labels_ = {"s", "t"};
  g.edges_.push_back({0, 1, ""});
  g.finish();
  return g;
}

LaaksoGraph LaaksoGraph::extend(const LaaksoGraph& child) {
  LaaksoGraph g;
  g.level_ = child.level_ + 1;
  g.labels_ = {"s", "t", "b", "u", "l", "c"};
  g.labels_.reserve(expected_vertex_count(g.level_));
  for (int k = 0; k < 6; ++k) {
    for (const auto& l : child.labels_) {
      if (!is_endpoint_label(l)) g.labels_.push_back(char('0' + k) + l);
    }
  }

  std::unordered_map<std::string, VertexId> index;
  index.reserve(g.labels_.size() * 2);
  for (VertexId v = 0; v < g.labels_.size(); ++v) index.emplace(g.labels_[v], v);

  g.edges_.reserve(expected_edge_count(g.level_));
  for (int k = 0; k < 6; ++k) {
    const auto [p, q] = kPattern[k];
    auto rename = [&](VertexId cv) -> VertexId {
      const std::string& l = child.labels_[cv];
      if (l == "s") return index.at(p);
      if (l == "t") return index.at(q);
      return index.at(char('0' + k) + l);
    };
    for (const auto& e : child.edges_) {
      g.edges_.push_back({rename(e.a), rename(e.b), char('0' + k) + e.address});
    }
  }

  if (g.level_ == 1) {
    EdgeCycle top;
    top.corners = {index.at("b"), index.at("u"), index.at("c"), index.at("l")};
    top.member_edges = {1, 2, 4, 3};  // b-u, u-c, c-l(=e4 reversed), l-b(=e3 reversed)
    top.address = "";
    g.cycles_.push_back(std::move(top));
  } else {
    const auto child_edges = static_cast<std::uint32_t>(child.edges_.size());
    g.cycles_.reserve(expected_cycle_count(g.level_));
    for (int k = 0; k < 6; ++k) {
      for (const auto& cyc : child.cycles_) {
        EdgeCycle c;
        for (int i = 0; i < 4; ++i) {
          c.corners[i] = index.at(char('0' + k) + child.labels_[cyc.corners[i]]);
          c.member_edges[i] = static_cast<std::uint32_t>(k) * child_edges + cyc.member_edges[i];
        }
        c.address = char('0' + k) + cyc.address;
        g.cycles_.push_back(std::move(c));
      }
    }
  }

  g.index_ = std::move(index);
  g.finish();
  return g;
}

LaaksoGraph LaaksoGraph::build(int level) {
  if (level < 0) throw std::invalid_argument("build: negative level");
  if (level > 10) throw resource_limit_error("build: level " + std::to_string(level) + " exceeds hard limit 10");
  LaaksoGraph g = base();
  for (int i = 0; i < level; ++i) g = extend(g);
  return g;
}

void LaaksoGraph::finish() {
  if (index_.empty()) {
    index_.reserve(labels_.size() * 2);
    for (VertexId v = 0; v < labels_.size(); ++v) index_.emplace(labels_[v], v);
  }
  endpoints_ = {index_.at("s"), index_.at("t")};

  offsets_.assign(labels_.size() + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.a + 1];
    ++offsets_[e.b + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.a]++] = e.b;
    adjacency_[fill[e.b]++] = e.a;
  }
}

std::optional<VertexId> LaaksoGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId LaaksoGraph::require(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::invalid_argument("unknown vertex label '" + std::string(label) + "' at level " +
                              std::to_string(level_));
}

std::string involute_label(std::string_view label) {
  if (label == "s") return "t";
  if (label == "t") return "s";
  std::string out;
  out.reserve(label.size());
  for (char ch : label.substr(0, label.size() - 1)) {
    switch (ch) {
      case '0': out += '5'; break;
      case '5': out += '0'; break;
      case '1': out += '2'; break;
      case '2': out += '1'; break;
      case '3': out += '4'; break;
      case '4': out += '3'; break;
      default: throw std::invalid_argument("bad label digit");
    }
  }
  char last = label.back();
  out += (last == 'b') ? 'c' : (last == 'c') ? 'b' : last;
  return out;
}

std::vector<VertexId> endpoint_involution(const LaaksoGraph& g) {
  std::vector<VertexId> perm(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) perm[v] = g.require(involute_label(g.label(v)));
  return perm;
}

}  // namespace laakso
