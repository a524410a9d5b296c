// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/diffset.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "laakso/covering.hpp"
#include "laakso/errors.hpp"
#include "laakso/metric.hpp"

namespace laakso {

EvalLattice::EvalLattice(LaaksoFamily& family, int level)
    : family_(family), level_(level), graph_(&family.graph(level)) {}

const std::vector<std::int32_t>& EvalLattice::row(const Point& p) {
  if (p.level > level_)
    throw std::invalid_argument("EvalLattice: point level exceeds lattice level");
  VertexId v = family_.lift(p, level_).vertex;
  auto it = rows_.find(v);
  if (it == rows_.end()) it = rows_.emplace(v, bfs_hops(*graph_, v)).first;
  return it->second;
}

ScaledDistance eval_diff(LaaksoFamily& family, const DiffFn& f, const Point& z) {
  return family.point_dist(f.x, z) - family.point_dist(f.y, z);
}

namespace {

int defining_level(const DiffFn& f) { return std::max(f.x.level, f.y.level); }

std::int64_t lattice_abs_sup(EvalLattice& lat, const DiffFn& f, const DiffFn* g,
                             VertexId* arg_out = nullptr) {
  const auto& rx = lat.row(f.x);
  const auto& ry = lat.row(f.y);
  const std::int32_t* rt = nullptr;
  const std::int32_t* rs = nullptr;
  if (g != nullptr) {
    rt = lat.row(g->x).data();
    rs = lat.row(g->y).data();
  }
  std::int64_t best = -1;
  VertexId arg = 0;
  for (VertexId z = 0; z < lat.graph().vertex_count(); ++z) {
    std::int64_t v = std::int64_t{rx[z]} - ry[z];
    if (g != nullptr) v -= std::int64_t{rt[z]} - rs[z];
    if (v < 0) v = -v;
    if (v > best) {
      best = v;
      arg = z;
    }
  }
  if (arg_out != nullptr) *arg_out = arg;
  return best;
}

}  // namespace

ScaledDistance linf_norm(LaaksoFamily& family, const DiffFn& f) {
  EvalLattice lat(family, defining_level(f) + 1);
  ScaledDistance sup = ScaledDistance::units(lattice_abs_sup(lat, f, nullptr), lat.level());
  ScaledDistance rho = family.point_dist(f.x, f.y);
  if (sup != rho)
    throw math_check_error("linf_norm: lattice supremum " + std::to_string(sup.value) +
                           "@4^-" + std::to_string(sup.unit_exponent) +
                           " differs from rho(x,y)");
  return sup;
}

ScaledDistance linf_dist(LaaksoFamily& family, const DiffFn& f, const DiffFn& g) {
  int m = std::max(defining_level(f), defining_level(g));
  EvalLattice lat(family, m + 1);
  return linf_dist_on(lat, f, g);
}

ScaledDistance linf_dist_on(EvalLattice& lattice, const DiffFn& f, const DiffFn& g) {
  return ScaledDistance::units(lattice_abs_sup(lattice, f, &g), lattice.level());
}

KuratowskiReport kuratowski_isometry_check(LaaksoFamily& family, int level) {
  if (level > 3) throw std::invalid_argument("kuratowski_isometry_check: level must be <= 3");
  const LaaksoGraph& g = family.graph(level);
  EvalLattice lat(family, level + 1);
  KuratowskiReport report;
  report.level = level;
  auto fine = all_pairs(lat.graph());
  std::vector<VertexId> lifted(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    lifted[v] = lat.graph().require(g.label(v));
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    auto rx = fine.row(lifted[x]);
    for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
      auto ry = fine.row(lifted[y]);
      std::int32_t sup = 0;
      for (VertexId z = 0; z < fine.size(); ++z)
        sup = std::max(sup, std::abs(rx[z] - ry[z]));
      ++report.pairs_checked;
      if (sup != fine.units(lifted[x], lifted[y]))
        report.violations.push_back({g.label(x), g.label(y)});
    }
  }
  return report;
}

namespace {

FamilyMember cycle_member(LaaksoFamily& family, int level, const EdgeCycle& cyc,
                          const LaaksoGraph& g) {
  FamilyMember m;
  m.cycle_address = cyc.address;
  for (VertexId c : cyc.corners) m.cycle_corners.push_back(g.label(c));
  m.x = Point{level, g.require(cyc.address + "u")};
  m.y = family.point(level + 1, cyc.address + "4u");
  return m;
}

}  // namespace

SeparationFamily separated_family(LaaksoFamily& family, int level) {
  if (level < 1 || level > family.cap() - 2)
    throw std::invalid_argument("separated_family: require 1 <= level <= cap-2");
  const LaaksoGraph& g = family.graph(level);
  SeparationFamily fam;
  fam.level = level;
  fam.r = ScaledDistance::units(1, level);
  fam.eval_level = level + 2;

  for (const auto& cyc : g.edge_cycles()) fam.members.push_back(cycle_member(family, level, cyc, g));
  if (static_cast<std::int64_t>(fam.members.size()) != expected_cycle_count(level))
    throw math_check_error("separated_family: member count mismatch");

  EvalLattice lat(family, fam.eval_level);
  ScaledDistance two_r = ScaledDistance::units(2, level);
  for (auto& m : fam.members) {
    DiffFn f{m.x, m.y};
    m.norm = ScaledDistance::units(lattice_abs_sup(lat, f, nullptr), lat.level());
    if (m.norm != family.point_dist(m.x, m.y))
      throw math_check_error("separated_family: norm identity failed for cycle " + m.cycle_address);
    if (!(m.norm < two_r))
      throw math_check_error("separated_family: member norm not below 2r for cycle " + m.cycle_address);
    if (fam.max_norm < m.norm) fam.max_norm = m.norm;
  }

  for (std::size_t a = 0; a < fam.members.size(); ++a) {
    DiffFn fa{fam.members[a].x, fam.members[a].y};
    for (std::size_t b = a + 1; b < fam.members.size(); ++b) {
      DiffFn fb{fam.members[b].x, fam.members[b].y};
      ScaledDistance d = linf_dist_on(lat, fa, fb);
      if (d < fam.r)
        throw math_check_error("separated_family: pair (" + fam.members[a].cycle_address + ", " +
                               fam.members[b].cycle_address + ") closer than r");
      if (!fam.min_pairwise || d < *fam.min_pairwise) fam.min_pairwise = d;
    }
  }
  return fam;
}

RefuteOutcome refute_cover(LaaksoFamily& family, int level,
                           const std::vector<CenterPair>& centers) {
  if (level < 2 || level > family.cap() - 2)
    throw std::invalid_argument("refute_cover: require 2 <= level <= cap-2");
  for (const auto& c : centers) {
    if (std::max(c.t.level, c.s.level) > family.cap() - 2)
      throw std::invalid_argument("refute_cover: center level exceeds cap-2");
  }

  const LaaksoGraph& g = family.graph(level);
  ScaledDistance r = ScaledDistance::units(1, level);

  // A center blocks a cycle when it is strictly within r of a corner. Two
  // cycles' corner sets are never closer than 2r, so blocking is unique per
  // center point.
  auto blocked = [&](const EdgeCycle& cyc, const Point& p) {
    for (VertexId corner : cyc.corners) {
      if (family.point_dist(Point{level, corner}, p) < r) return true;
    }
    return false;
  };

  const EdgeCycle* free_cycle = nullptr;
  for (const auto& cyc : g.edge_cycles()) {
    bool any = false;
    for (const auto& c : centers) {
      if (blocked(cyc, c.t) || blocked(cyc, c.s)) {
        any = true;
        break;
      }
    }
    if (!any) {
      free_cycle = &cyc;
      break;
    }
  }
  if (free_cycle == nullptr)
    return {std::nullopt, "every edge cycle has a center strictly within r of its corners"};

  RefutationCertificate cert;
  cert.level = level;
  cert.r = r;
  cert.centers = centers;
  cert.free_cycle_address = free_cycle->address;
  for (VertexId c : free_cycle->corners) cert.free_cycle_corners.push_back(g.label(c));
  FamilyMember member = cycle_member(family, level, *free_cycle, g);
  cert.witness = DiffFn{member.x, member.y};

  int m = level + 1;
  for (const auto& c : centers) m = std::max({m, c.t.level, c.s.level});
  cert.eval_level = m + 1;
  EvalLattice lat(family, cert.eval_level);

  cert.witness_norm = ScaledDistance::units(lattice_abs_sup(lat, cert.witness, nullptr), lat.level());
  if (cert.witness_norm != family.point_dist(member.x, member.y) ||
      !(cert.witness_norm < ScaledDistance::units(2, level)) ||
      !(cert.witness_norm > r))
    throw math_check_error("refute_cover: witness norm outside (r, 2r)");

  for (std::size_t j = 0; j < centers.size(); ++j) {
    DiffFn gj{centers[j].t, centers[j].s};
    VertexId arg = 0;
    std::int64_t sup = lattice_abs_sup(lat, cert.witness, &gj, &arg);
    ScaledDistance value = ScaledDistance::units(sup, lat.level());
    if (value < r) {
      return {std::nullopt, "center " + std::to_string(j) +
                                " stays within r of the witness on the whole lattice"};
    }
    cert.per_center.push_back({static_cast<int>(j), Point{lat.level(), arg}, value});
  }
  return {cert, ""};
}

std::vector<CenterPair> random_centers(LaaksoFamily& family, int level, int count,
                                       std::uint64_t seed) {
  const LaaksoGraph& g = family.graph(level);
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> Point {
    return {level, static_cast<VertexId>(rng() % g.vertex_count())};
  };
  std::vector<CenterPair> centers;
  centers.reserve(count);
  for (int i = 0; i < count; ++i) {
    Point t = draw();
    Point s = draw();
    centers.push_back({t, s});
  }
  return centers;
}

std::vector<GrowthRow> growth_probe(LaaksoFamily& family, int max_level, int trials,
                                    std::uint64_t seed) {
  if (max_level < 1 || max_level > family.cap() - 2)
    throw std::invalid_argument("growth_probe: require 1 <= max_level <= cap-2");
  std::vector<GrowthRow> rows;
  for (int i = 1; i <= max_level; ++i) {
    GrowthRow row;
    row.level = i;
    row.edge_cycles = expected_cycle_count(i);
    SeparationFamily fam = separated_family(family, i);
    row.packing_lower_bound = static_cast<std::int64_t>(fam.members.size());
    row.min_pairwise = fam.min_pairwise;
    row.max_norm = fam.max_norm;

    const LaaksoGraph& g = family.graph(i);
    auto matrix = all_pairs(g);
    std::vector<int> radii;
    for (int mexp = 0; mexp <= i; ++mexp) radii.push_back(mexp);
    row.doubling_max = doubling_report(g, matrix, radii).max_cover_size;

    if (i >= 2 && trials > 0) {
      int m_count = static_cast<int>((expected_cycle_count(i) - 1) / 2);
      for (int t = 0; t < trials; ++t) {
        auto centers = random_centers(family, i, m_count, seed + static_cast<std::uint64_t>(t));
        auto outcome = refute_cover(family, i, centers);
        ++row.refute_trials;
        if (outcome.certificate) ++row.refute_successes;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace laakso
