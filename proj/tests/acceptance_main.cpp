// Licensed under the Apache 2.0 license. See LICENSE in the project root.
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "laakso/covering.hpp"
#include "laakso/diffset.hpp"
#include "laakso/family.hpp"
#include "laakso/io.hpp"
#include "laakso/metric.hpp"
#include "laakso/verify.hpp"

using namespace laakso;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& detail, const std::string& what) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// ---- 1: structure counts -------------------------------------------------
bool structure_counts(std::string& detail) {
  bool ok = true;
  for (int i = 0; i <= 5; ++i) {
    LaaksoGraph g = LaaksoGraph::build(i);
    ok &= check(static_cast<std::int64_t>(g.edge_count()) == expected_edge_count(i), detail,
                "edge count at level " + std::to_string(i));
    ok &= check(static_cast<std::int64_t>(g.vertex_count()) == expected_vertex_count(i), detail,
                "vertex count at level " + std::to_string(i));
    ok &= check(static_cast<std::int64_t>(g.edge_cycles().size()) == expected_cycle_count(i),
                detail, "cycle count at level " + std::to_string(i));
  }
  return ok;
}

// ---- 2: diameter ----------------------------------------------------------
bool diameter_one(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int i = 0; i <= 4; ++i) {
    ScaledDistance d = diameter(family.graph(i));
    ok &= check(d == ScaledDistance::units(ScaledDistance::pow4(i), i), detail,
                "diameter at level " + std::to_string(i));
  }
  return ok;
}

// ---- 3: refinement isometry ------------------------------------------------
bool refinement_isometry(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int i = 0; i <= 3; ++i) {
    auto mi = all_pairs(family.graph(i));
    for (int j = i + 1; j <= 4; ++j) {
      RefinementMap map = family.refine(i, j);
      const LaaksoGraph& gj = family.graph(j);
      std::int64_t scale = ScaledDistance::pow4(j - i);
      for (VertexId a = 0; a < mi.size() && ok; ++a) {
        auto row = bfs_hops(gj, map.vertex_map[a]);
        for (VertexId b = 0; b < mi.size(); ++b) {
          if (row[map.vertex_map[b]] != mi.units(a, b) * scale) {
            ok = check(false, detail,
                       "pair at level " + std::to_string(i) + " distorted in level " +
                           std::to_string(j));
            break;
          }
        }
      }
    }
  }
  return ok;
}

// ---- 4: density / GH gap ----------------------------------------------------
bool gap_bounds(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int i = 0; i <= 3; ++i) {
    GapCertificate c = hausdorff_gap(family, i, i + 1);
    ok &= check(c.max_gap <= c.bound, detail, "gap bound at (" + std::to_string(i) + ")");
  }
  for (int i = 0; i <= 3; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      ScaledDistance g = gh_upper_bound(family, i, j);
      ok &= check(g < ScaledDistance::units(1, i), detail,
                  "gh bound at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return ok;
}

// ---- 5: Kuratowski norm identity --------------------------------------------
bool norm_identity(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int level : {0, 1, 2}) {
    KuratowskiReport rep = kuratowski_isometry_check(family, level);
    ok &= check(rep.violations.empty(), detail,
                "norm identity violated at level " + std::to_string(level));
  }
  // level 3: 10^4 sampled pairs
  const LaaksoGraph& g3 = family.graph(3);
  std::mt19937_64 rng(0xC5);
  for (int t = 0; t < 10'000 && ok; ++t) {
    VertexId x = static_cast<VertexId>(rng() % g3.vertex_count());
    VertexId y = static_cast<VertexId>(rng() % g3.vertex_count());
    DiffFn f{Point{3, x}, Point{3, y}};
    ScaledDistance norm = linf_norm(family, f);  // throws on identity failure
    ok &= check(norm == family.point_dist(f.x, f.y), detail, "sampled norm at level 3");
  }
  return ok;
}

// ---- 6: lattice stability ----------------------------------------------------
bool lattice_stability(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  std::mt19937_64 rng(0xC6);
  auto random_point = [&](int max_level) {
    int level = static_cast<int>(rng() % (max_level + 1));
    const LaaksoGraph& g = family.graph(level);
    return Point{level, static_cast<VertexId>(rng() % g.vertex_count())};
  };
  for (int t = 0; t < 200 && ok; ++t) {
    DiffFn f{random_point(2), random_point(2)};
    DiffFn g{random_point(2), random_point(2)};
    int m = std::max({f.x.level, f.y.level, g.x.level, g.y.level});
    EvalLattice fine(family, m + 1);
    EvalLattice finer(family, m + 2);
    ok &= check(linf_dist_on(fine, f, g) == linf_dist_on(finer, f, g), detail,
                "lattice supremum changed between levels on trial " + std::to_string(t));
  }
  return ok;
}

// ---- 7: doubling of the space -------------------------------------------------
bool doubling_bounded(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  int worst = 0;
  for (int level = 0; level <= 3; ++level) {
    const LaaksoGraph& g = family.graph(level);
    auto m = all_pairs(g);
    std::vector<int> radii(level + 1);
    std::iota(radii.begin(), radii.end(), 0);
    DoublingReport rep = doubling_report(g, m, radii);
    worst = std::max(worst, rep.max_cover_size);
    for (const auto& e : rep.entries)
      ok &= check(e.exact, detail, "inexact cover at level " + std::to_string(level));
  }
  ok &= check(worst <= 8, detail, "covering number " + std::to_string(worst) + " above 8");
  std::printf("       note: observed maximum covering number %d (limit-space constant 6)%s\n",
              worst, worst > 6 ? " -- discretization finding" : "");
  return ok;
}

// ---- 8: separated families -----------------------------------------------------
bool separated_families(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int i : {2, 3}) {
    SeparationFamily fam = separated_family(family, i);  // verifies pairwise >= r, norms < 2r
    ok &= check(static_cast<std::int64_t>(fam.members.size()) == expected_cycle_count(i), detail,
                "family size at level " + std::to_string(i));
    ok &= check(fam.min_pairwise.has_value() && *fam.min_pairwise >= ScaledDistance::units(1, i),
                detail, "pairwise separation at level " + std::to_string(i));
    ok &= check(fam.max_norm < ScaledDistance::units(2, i), detail,
                "norm bound at level " + std::to_string(i));
  }
  return ok;
}

// ---- 9: refutation certificates --------------------------------------------------
bool refutation_trials(std::string& detail) {
  bool ok = true;
  LaaksoFamily family;
  for (int i : {2, 3}) {
    int m_count = static_cast<int>((expected_cycle_count(i) - 1) / 2);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      auto centers =
          random_centers(family, i, m_count, 0xC900 + static_cast<std::uint64_t>(trial));
      RefuteOutcome out = refute_cover(family, i, centers);
      ok &= check(out.certificate.has_value(), detail,
                  "trial " + std::to_string(trial) + " at level " + std::to_string(i) +
                      " not refuted");
      if (!ok) break;
      ordered_json doc = refutation_certificate_json(family, *out.certificate);
      VerifyResult res = verify_document(doc, family.cap());
      ok &= check(res.ok, detail,
                  "certificate failed independent verification on trial " + std::to_string(trial));
    }
  }
  return ok;
}

// ---- 10: homogeneity exponent ------------------------------------------------------
bool assouad_exponent(std::string& detail) {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(4);
  auto m = all_pairs(g);
  HomogeneityFit fit = assouad_fit(g, m, default_scale_pairs(4));
  double target = std::log(6.0) / std::log(4.0);
  bool ok = check(std::abs(fit.exponent_s - target) <= 0.1, detail,
                  "fitted exponent " + std::to_string(fit.exponent_s) + " vs " +
                      std::to_string(target) + " +- 0.1");
  std::printf("       note: fitted s = %.4f (log 6 / log 4 = %.4f), M = %.3f\n", fit.exponent_s,
              target, fit.constant_M);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"structure counts: 6^i edges, (4*6^i+6)/5 vertices, 6^{i-1} cycles, i <= 5",
       structure_counts},
      {"diameter(X_i) = 1 exactly, i <= 4", diameter_one},
      {"refinement maps preserve all pairwise distances, i < j <= 4", refinement_isometry},
      {"hausdorff gap <= 4^{-(i+1)} and GH upper bound < 4^{-i}", gap_bounds},
      {"sup-norm identity ||f_xy|| = rho(x,y): exhaustive i <= 2, 10^4 samples at i = 3",
       norm_identity},
      {"lattice suprema stable one level deeper (200 seeded quadruples)", lattice_stability},
      {"doubling covering numbers exact and <= 8 over all vertices and radii, i <= 3",
       doubling_bounded},
      {"separated families of sizes 6 and 36 with pairwise >= 4^{-i}, norms < 2*4^{-i}",
       separated_families},
      {"100/100 seeded refutation trials certify and verify at i = 2, 3", refutation_trials},
      {"homogeneity exponent on X_4 within 0.1 of log 6 / log 4", assouad_exponent},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
