// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laakso/graph.hpp"

namespace laakso {

namespace {

// The checker keeps its own minimal machinery: label-addressed points,
// a plain queue BFS, and distances as integers at an explicit exponent.

struct Pt {
  int level = 0;
  std::string label;
};

std::optional<Pt> read_point(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("label")) return std::nullopt;
  return Pt{j.at("level").get<int>(), j.at("label").get<std::string>()};
}

class Checker {
 public:
  explicit Checker(int cap) : cap_(cap) {}

  const LaaksoGraph* graph(int level) {
    if (level < 0 || level > cap_) return nullptr;
    auto it = graphs_.find(level);
    if (it == graphs_.end()) it = graphs_.emplace(level, LaaksoGraph::build(level)).first;
    return &it->second;
  }

  // Distance between two labels, both lifted to `level`, in units 4^{-level}.
  // Returns -1 when a label does not exist at that level.
  std::int64_t dist_at(int level, const std::string& a, const std::string& b) {
    const LaaksoGraph* g = graph(level);
    if (g == nullptr) return -1;
    auto va = g->find(a);
    auto vb = g->find(b);
    if (!va || !vb) return -1;
    const auto& row = bfs_row(level, *va);
    return row[*vb];
  }

  const std::vector<std::int32_t>& bfs_row(int level, VertexId src) {
    auto key = std::pair<int, VertexId>(level, src);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    const LaaksoGraph& g = *graph(level);
    std::vector<std::int32_t> d(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    d[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId v : g.neighbors(u)) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return rows_.emplace(key, std::move(d)).first->second;
  }

  int cap() const { return cap_; }

 private:
  int cap_;
  std::map<int, LaaksoGraph> graphs_;
  std::map<std::pair<int, VertexId>, std::vector<std::int32_t>> rows_;
};

// value * 4^{-exp} as a pair comparable across exponents via cross scaling.
struct Q {
  std::int64_t value = 0;
  int exp = 0;
};

// Bounds chosen so cross-scaling below cannot overflow, well beyond any
// value a level-capped toolkit can emit.
constexpr std::int64_t kMaxAbsValue = std::int64_t{1} << 26;
constexpr int kMaxExponent = 13;

std::optional<Q> read_scaled(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("value") || !j.contains("unit_exponent")) return std::nullopt;
  if (!j.at("value").is_number_integer() || !j.at("unit_exponent").is_number_integer())
    return std::nullopt;
  Q q{j.at("value").get<std::int64_t>(), j.at("unit_exponent").get<int>()};
  if (q.exp < 0 || q.exp > kMaxExponent || q.value < -kMaxAbsValue || q.value > kMaxAbsValue)
    return std::nullopt;
  return q;
}

std::int64_t shift(std::int64_t v, int times) { return v << (2 * times); }

int cmp(Q a, Q b) {
  int e = std::max(a.exp, b.exp);
  std::int64_t av = shift(a.value, e - a.exp);
  std::int64_t bv = shift(b.value, e - b.exp);
  return av < bv ? -1 : (av > bv ? 1 : 0);
}

struct CycleShape {
  std::string address;
  std::array<std::string, 4> corners;  // b, u, c, l
};

std::optional<CycleShape> check_cycle(VerifyResult& res, Checker& chk, int level,
                                      const nlohmann::json& fc) {
  CycleShape shape;
  if (!fc.contains("address") || !fc.contains("corners") || fc.at("corners").size() != 4) {
    res.fail("free_cycle: missing address or corners");
    return std::nullopt;
  }
  shape.address = fc.at("address").get<std::string>();
  if (static_cast<int>(shape.address.size()) != level - 1) {
    res.fail("free_cycle: address length must be level-1");
    return std::nullopt;
  }
  for (char c : shape.address) {
    if (c < '0' || c > '5') {
      res.fail("free_cycle: bad address digit");
      return std::nullopt;
    }
  }
  const char* letters = "bucl";
  for (int i = 0; i < 4; ++i) {
    shape.corners[i] = fc.at("corners")[i].get<std::string>();
    if (shape.corners[i] != shape.address + letters[i]) {
      res.fail("free_cycle: corner " + std::to_string(i) + " does not match address");
      return std::nullopt;
    }
  }
  const LaaksoGraph* g = chk.graph(level);
  if (g == nullptr) {
    res.fail("free_cycle: level beyond cap");
    return std::nullopt;
  }
  // The four corner labels must exist and form a 4-cycle of unit edges with
  // junction degrees 3 and side degrees 2.
  std::array<VertexId, 4> ids{};
  for (int i = 0; i < 4; ++i) {
    auto v = g->find(shape.corners[i]);
    if (!v) {
      res.fail("free_cycle: corner label missing from graph");
      return std::nullopt;
    }
    ids[i] = *v;
  }
  auto adjacent = [&](VertexId a, VertexId b) {
    auto nb = g->neighbors(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  };
  for (int i = 0; i < 4; ++i) {
    if (!adjacent(ids[i], ids[(i + 1) % 4])) res.fail("free_cycle: corners are not a 4-cycle");
  }
  if (g->degree(ids[0]) != 3 || g->degree(ids[2]) != 3) res.fail("free_cycle: junction degree != 3");
  if (g->degree(ids[1]) != 2 || g->degree(ids[3]) != 2) res.fail("free_cycle: side degree != 2");
  return shape;
}

// rho(a, b) at the finer of the two point levels, as units at that level,
// or nullopt when labels are invalid.
std::optional<Q> point_dist(Checker& chk, const Pt& a, const Pt& b) {
  int level = std::max(a.level, b.level);
  std::int64_t d = chk.dist_at(level, a.label, b.label);
  if (d < 0) return std::nullopt;
  return Q{d, level};
}

void verify_refutation(VerifyResult& res, Checker& chk, const nlohmann::json& doc) {
  int level = doc.value("level", -1);
  if (level < 2 || level > chk.cap()) {
    res.fail("level must be in [2, cap]");
    return;
  }
  auto r = read_scaled(doc.at("r"));
  if (!r || cmp(*r, Q{1, level}) != 0) {
    res.fail("r must equal 4^-level");
    return;
  }
  int eval_level = doc.value("eval_level", -1);
  if (eval_level < level + 2 || eval_level > chk.cap()) {
    res.fail("eval_level out of range");
    return;
  }

  auto shape = check_cycle(res, chk, level, doc.at("free_cycle"));
  if (!shape) return;

  auto wx = read_point(doc.at("witness").at("x"));
  auto wy = read_point(doc.at("witness").at("y"));
  if (!wx || !wy) {
    res.fail("witness points malformed");
    return;
  }

  // Witness norm: sup_z |rho(x,z) - rho(y,z)| <= rho(x,y) by the triangle
  // inequality, so rho(x,y) < 2r certifies membership in B(0, 2r). The
  // claimed norm must also match rho(x,y) (it is attained at z = y).
  auto rho_xy = point_dist(chk, *wx, *wy);
  auto norm = read_scaled(doc.at("norm"));
  if (!rho_xy || !norm) {
    res.fail("witness norm not checkable");
    return;
  }
  if (cmp(*norm, *rho_xy) != 0) res.fail("claimed norm differs from rho(x,y)");
  if (cmp(*rho_xy, Q{2, level}) >= 0) res.fail("witness norm not strictly below 2r");
  if (cmp(*rho_xy, Q{1, level}) <= 0) res.fail("witness norm not strictly above r");

  const auto& centers = doc.at("centers");
  const auto& per_center = doc.at("per_center");
  if (per_center.size() != centers.size()) {
    res.fail("per_center must defeat every center exactly once");
    return;
  }
  std::set<int> seen;
  for (const auto& pc : per_center) {
    int idx = pc.value("index", -1);
    if (idx < 0 || idx >= static_cast<int>(centers.size()) || !seen.insert(idx).second) {
      res.fail("per_center: bad or duplicate center index");
      return;
    }
    auto t = read_point(centers[idx].at("t"));
    auto s = read_point(centers[idx].at("s"));
    auto z = read_point(pc.at("z"));
    auto claimed = read_scaled(pc.at("value"));
    if (!t || !s || !z || !claimed) {
      res.fail("per_center: malformed entry");
      return;
    }

    // Centers must genuinely avoid the cycle: distance >= r to each corner.
    for (const auto& p : {*t, *s}) {
      for (const auto& corner : shape->corners) {
        auto d = point_dist(chk, p, Pt{level, corner});
        if (!d) {
          res.fail("per_center: center label invalid");
          return;
        }
        if (cmp(*d, Q{1, level}) < 0)
          res.fail("center " + std::to_string(idx) + " strictly within r of the free cycle");
      }
    }

    // |f(z) - g_j(z)| recomputed from four independent distance scans.
    int zl = std::max({wx->level, wy->level, t->level, s->level, z->level});
    std::int64_t dx = chk.dist_at(zl, wx->label, z->label);
    std::int64_t dy = chk.dist_at(zl, wy->label, z->label);
    std::int64_t dt = chk.dist_at(zl, t->label, z->label);
    std::int64_t ds = chk.dist_at(zl, s->label, z->label);
    if (dx < 0 || dy < 0 || dt < 0 || ds < 0) {
      res.fail("per_center: evaluation point invalid");
      return;
    }
    std::int64_t v = (dx - dy) - (dt - ds);
    if (v < 0) v = -v;
    Q value{v, zl};
    if (cmp(value, *claimed) != 0)
      res.fail("per_center " + std::to_string(idx) + ": claimed value does not recompute");
    if (cmp(value, Q{1, level}) < 0)
      res.fail("per_center " + std::to_string(idx) + ": evaluation below r");
  }
}

void verify_separation(VerifyResult& res, Checker& chk, const nlohmann::json& doc) {
  int level = doc.value("level", -1);
  if (level < 1 || level > chk.cap()) {
    res.fail("level must be in [1, cap]");
    return;
  }
  auto r = read_scaled(doc.at("r"));
  if (!r || cmp(*r, Q{1, level}) != 0) {
    res.fail("r must equal 4^-level");
    return;
  }
  int eval_level = doc.value("eval_level", -1);
  if (eval_level < level + 2 || eval_level > chk.cap()) {
    res.fail("eval_level out of range");
    return;
  }
  const LaaksoGraph* g = chk.graph(level);
  const LaaksoGraph* lattice = chk.graph(eval_level);
  if (g == nullptr || lattice == nullptr) {
    res.fail("levels beyond cap");
    return;
  }

  const auto& members = doc.at("members");
  if (static_cast<std::int64_t>(members.size()) != expected_cycle_count(level)) {
    res.fail("member count must equal 6^{level-1}");
    return;
  }

  struct M {
    Pt x, y;
    VertexId lx = 0, ly = 0;  // lifted to the lattice
  };
  std::vector<M> ms;
  std::set<std::string> addresses;
  for (const auto& mj : members) {
    auto shape = check_cycle(res, chk, level,
                             nlohmann::json{{"address", mj.at("cycle")}, {"corners", mj.at("corners")}});
    if (!shape) return;
    if (!addresses.insert(shape->address).second) {
      res.fail("duplicate cycle address");
      return;
    }
    auto x = read_point(mj.at("x"));
    auto y = read_point(mj.at("y"));
    auto norm = read_scaled(mj.at("norm"));
    if (!x || !y || !norm) {
      res.fail("member malformed");
      return;
    }
    auto rho = point_dist(chk, *x, *y);
    if (!rho || cmp(*norm, *rho) != 0) {
      res.fail("member norm differs from rho(x,y) for cycle " + shape->address);
      return;
    }
    if (cmp(*rho, Q{2, level}) >= 0) res.fail("member norm not below 2r for cycle " + shape->address);
    auto lx = lattice->find(x->label);
    auto ly = lattice->find(y->label);
    if (!lx || !ly) {
      res.fail("member points do not lift to the eval level");
      return;
    }
    ms.push_back({*x, *y, *lx, *ly});
  }

  // Pairwise separation: a lattice maximum is a valid lower bound for the
  // true supremum, so >= r on the lattice suffices.
  auto claimed_min = doc.contains("min_pairwise") && !doc.at("min_pairwise").is_null()
                         ? read_scaled(doc.at("min_pairwise"))
                         : std::nullopt;
  std::optional<Q> min_seen;
  std::size_t n = lattice->vertex_count();
  for (std::size_t a = 0; a < ms.size(); ++a) {
    const auto& rxa = chk.bfs_row(eval_level, ms[a].lx);
    const auto& rya = chk.bfs_row(eval_level, ms[a].ly);
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      const auto& rxb = chk.bfs_row(eval_level, ms[b].lx);
      const auto& ryb = chk.bfs_row(eval_level, ms[b].ly);
      std::int64_t sup = 0;
      for (std::size_t z = 0; z < n; ++z) {
        std::int64_t v = (std::int64_t{rxa[z]} - rya[z]) - (std::int64_t{rxb[z]} - ryb[z]);
        if (v < 0) v = -v;
        if (v > sup) sup = v;
      }
      Q d{sup, eval_level};
      if (cmp(d, Q{1, level}) < 0)
        res.fail("pair (" + std::to_string(a) + "," + std::to_string(b) + ") separation below r");
      if (!min_seen || cmp(d, *min_seen) < 0) min_seen = d;
    }
  }
  if (claimed_min && min_seen && cmp(*claimed_min, *min_seen) != 0)
    res.fail("claimed min_pairwise does not recompute");
}

}  // namespace

VerifyResult verify_document(const nlohmann::json& doc, int cap) {
  VerifyResult res;
  Checker chk(cap);
  try {
    std::string type = doc.value("type", "");
    if (type == "refutation_certificate") {
      verify_refutation(res, chk, doc);
    } else if (type == "separation_family") {
      verify_separation(res, chk, doc);
    } else {
      res.fail("unknown document type '" + type + "'");
    }
  } catch (const std::exception& e) {
    res.fail(std::string("verification aborted: ") + e.what());
  }
  return res;
}

}  // namespace laakso
