// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "laakso/covering.hpp"
#include "laakso/family.hpp"
#include "oracles.hpp"

using namespace laakso;

namespace {

CoverProblem make_problem(const LaaksoGraph& g, const DistanceMatrix& m,
                          std::vector<VertexId> target, ScaledDistance radius) {
  CoverProblem p;
  p.graph = &g;
  p.matrix = &m;
  p.target = std::move(target);
  p.radius = radius;
  return p;
}

// Covering-number oracle on tiny instances: enumerate center subsets.
int enumeration_cover(const LaaksoGraph& g, const DistanceMatrix& m,
                      const std::vector<VertexId>& target, ScaledDistance radius, int max_size) {
  std::vector<std::vector<int>> sets(g.vertex_count());
  for (VertexId c = 0; c < g.vertex_count(); ++c)
    for (std::size_t t = 0; t < target.size(); ++t)
      if (m.at(c, target[t]) <= radius) sets[c].push_back(static_cast<int>(t));
  return oracles::min_cover_by_enumeration(sets, static_cast<int>(target.size()), max_size);
}

}  // namespace

TEST_CASE("balls") {
  LaaksoFamily family;
  const LaaksoGraph& g1 = family.graph(1);
  auto m1 = all_pairs(g1);

  CHECK(ball(g1, m1, g1.require("s"), ScaledDistance::units(4, 1)).size() == 6);  // radius = diameter

  // unit ball = center plus neighbors
  for (VertexId x = 0; x < g1.vertex_count(); ++x) {
    auto b = ball(g1, m1, x, ScaledDistance::units(1, 1));
    CHECK(b.size() == 1 + static_cast<std::size_t>(g1.degree(x)));
  }

  // sub-unit radius gives the singleton
  CHECK(ball(g1, m1, g1.require("b"), ScaledDistance::units(1, 2)) ==
        std::vector<VertexId>{g1.require("b")});

  // level-2 endpoint ball checked against a direct row scan
  const LaaksoGraph& g2 = family.graph(2);
  auto m2 = all_pairs(g2);
  auto fw = oracles::floyd_warshall(g2);
  VertexId s = g2.require("s");
  std::size_t expect = 0;
  for (VertexId v = 0; v < g2.vertex_count(); ++v)
    if (fw[s][v] <= 4) ++expect;
  CHECK(ball(g2, m2, s, ScaledDistance::units(4, 2)).size() == expect);

  CHECK_THROWS_AS(ball(g1, m1, 77, ScaledDistance::units(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(ball(g1, m1, 0, ScaledDistance::zero()), std::invalid_argument);
}

TEST_CASE("greedy cover basics") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(1);
  auto m = all_pairs(g);

  auto single = greedy_cover(make_problem(g, m, {g.require("u")}, ScaledDistance::units(1, 1)));
  CHECK(single.centers.size() == 1);

  // covering B(x, 2 units) by unit balls never needs more than 6 on X_1
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    auto target = ball(g, m, x, ScaledDistance::units(2, 1));
    auto res = greedy_cover(make_problem(g, m, target, ScaledDistance::units(1, 1)));
    CHECK(res.centers.size() <= 6);
  }

  // infeasible: candidates that cannot reach the target
  CoverProblem p = make_problem(g, m, {g.require("t")}, ScaledDistance::units(1, 1));
  p.candidate_centers = {g.require("s")};
  CHECK_THROWS_AS(greedy_cover(p), std::invalid_argument);
}

TEST_CASE("exact cover matches subset enumeration on small instances") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(1);
  auto m = all_pairs(g);

  // the square by unit balls: two centers suffice, one does not
  std::vector<VertexId> square{g.require("b"), g.require("u"), g.require("c"), g.require("l")};
  auto res = min_cover_exact(make_problem(g, m, square, ScaledDistance::units(1, 1)));
  CHECK(res.exact);
  CHECK(res.centers.size() == 2);
  CHECK(enumeration_cover(g, m, square, ScaledDistance::units(1, 1), 4) == 2);

  // one ball covers itself
  auto self = min_cover_exact(
      make_problem(g, m, ball(g, m, g.require("b"), ScaledDistance::units(1, 1)),
                   ScaledDistance::units(1, 1)));
  CHECK(self.exact);
  CHECK(self.centers.size() == 1);

  // exact <= greedy on a spread of instances, and both match enumeration
  const LaaksoGraph& g2 = family.graph(2);
  auto m2 = all_pairs(g2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    VertexId x = rng() % g2.vertex_count();
    ScaledDistance r = ScaledDistance::units(1 + static_cast<int>(rng() % 6), 2);
    ScaledDistance rho = ScaledDistance::units(1 + static_cast<int>(rng() % 3), 2);
    auto target = ball(g2, m2, x, r);
    if (target.size() > 24) continue;
    auto greedy = greedy_cover(make_problem(g2, m2, target, rho));
    auto exact = min_cover_exact(make_problem(g2, m2, target, rho));
    REQUIRE(exact.exact);
    CHECK(exact.centers.size() <= greedy.centers.size());
    CHECK(static_cast<int>(exact.centers.size()) ==
          enumeration_cover(g2, m2, target, rho, static_cast<int>(greedy.centers.size())));
  }
}

TEST_CASE("work limit falls back to greedy flagged inexact") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(2);
  auto m = all_pairs(g);
  std::vector<VertexId> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  auto res = min_cover_exact(make_problem(g, m, all, ScaledDistance::units(2, 2)), /*work_limit=*/1);
  CHECK(!res.exact);
  auto greedy = greedy_cover(make_problem(g, m, all, ScaledDistance::units(2, 2)));
  CHECK(res.centers.size() == greedy.centers.size());
}

TEST_CASE("doubling reports stay at the discrete constant 4") {
  LaaksoFamily family;
  for (int level = 1; level <= 3; ++level) {
    const LaaksoGraph& g = family.graph(level);
    auto m = all_pairs(g);
    std::vector<int> radii(level + 1);
    std::iota(radii.begin(), radii.end(), 0);
    DoublingReport rep = doubling_report(g, m, radii);
    CAPTURE(level);
    CHECK(rep.max_cover_size == 4);
    CHECK(rep.entries.size() == g.vertex_count() * radii.size());
    for (const auto& e : rep.entries) CHECK(e.exact);
  }
  // whole-space entry: covering X_1 by half-diameter balls needs one ball
  const LaaksoGraph& g1 = family.graph(1);
  auto m1 = all_pairs(g1);
  DoublingReport r1 = doubling_report(g1, m1, {0});
  for (const auto& e : r1.entries) CHECK(e.cover_size == 1);  // u is a metric center
  // sub-unit ball radius: the ball is a singleton
  DoublingReport r2 = doubling_report(g1, m1, {1});
  for (const auto& e : r2.entries) CHECK(e.cover_size <= 4);
  CHECK_THROWS_AS(doubling_report(g1, m1, {7}), std::invalid_argument);
}

TEST_CASE("doubling maximum stays at 4 through level 4") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(4);
  auto m = all_pairs(g);
  std::vector<int> radii(5);
  std::iota(radii.begin(), radii.end(), 0);
  DoublingReport rep = doubling_report(g, m, radii);
  CHECK(rep.max_cover_size == 4);  // same constant as levels 1..3
}

TEST_CASE("covering monotonicity and packing duality on X_2 balls") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(2);
  auto m = all_pairs(g);
  for (VertexId x = 0; x < g.vertex_count(); x += 3) {
    auto target = ball(g, m, x, ScaledDistance::units(4, 2));
    // non-increasing in rho
    std::size_t prev = 0;
    for (int units : {1, 2, 4}) {
      auto res = min_cover_exact(make_problem(g, m, target, ScaledDistance::units(units, 2)));
      if (prev != 0) CHECK(res.centers.size() <= prev);
      prev = res.centers.size();
    }
    // non-decreasing in the target
    auto bigger = ball(g, m, x, ScaledDistance::units(6, 2));
    auto small_cover = min_cover_exact(make_problem(g, m, target, ScaledDistance::units(2, 2)));
    auto big_cover = min_cover_exact(make_problem(g, m, bigger, ScaledDistance::units(2, 2)));
    CHECK(big_cover.centers.size() >= small_cover.centers.size());

    // maximal r-separated size >= N_r >= (strictly 2r)-separated size
    ScaledDistance r = ScaledDistance::units(2, 2);
    auto cover = min_cover_exact(make_problem(g, m, target, r));
    auto sep_r = greedy_separated_subset(m, target, r);
    auto sep_2r = greedy_separated_subset(m, target, ScaledDistance::units(5, 2));  // > 2r
    CHECK(sep_r.size() >= cover.centers.size());
    CHECK(sep_2r.size() <= cover.centers.size());
  }
}

TEST_CASE("covering numbers are scale self-similar deep inside a copy") {
  LaaksoFamily family;
  const LaaksoGraph& g3 = family.graph(3);
  const LaaksoGraph& g4 = family.graph(4);
  auto m3 = all_pairs(g3);
  auto m4 = all_pairs(g4);

  auto count = [&](const LaaksoGraph& g, const DistanceMatrix& m, const char* label, int mexp) {
    ScaledDistance r = ScaledDistance::units(ScaledDistance::pow4(g.level() - mexp), g.level());
    ScaledDistance half = ScaledDistance::units(2 * ScaledDistance::pow4(g.level() - mexp),
                                                g.level() + 1);
    auto target = ball(g, m, g.require(label), r);
    auto res = min_cover_exact(make_problem(g, m, target, half));
    REQUIRE(res.exact);
    return res.centers.size();
  };

  // N(B(x, 4^-m), 4^-m/2) transported one level deeper by the prefix isometry
  CHECK(count(g3, m3, "00u", 1) == count(g4, m4, "000u", 2));
  CHECK(count(g3, m3, "00u", 2) == count(g4, m4, "000u", 3));
}

TEST_CASE("assouad fit: a subdivided segment is 1-homogeneous") {
  LaaksoFamily family;
  const LaaksoGraph& g3 = family.graph(3);
  auto m3 = all_pairs(g3);
  auto path = family.image_vertices(0, 3);
  HomogeneityFit fit = assouad_fit(g3, m3, {{0, 1}, {0, 2}, {0, 3}}, path);
  CHECK(std::abs(fit.exponent_s - 1.0) <= 0.1);
  for (const auto& s : fit.samples) CHECK(s.count >= 1);  // a ball covers itself
}

TEST_CASE("assouad fit input validation") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(2);
  auto m = all_pairs(g);
  CHECK_THROWS_AS(assouad_fit(g, m, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(assouad_fit(g, m, {{0, 1}, {1, 2}, {0, 1}}), std::invalid_argument);  // equal ratios
  CHECK_THROWS_AS(assouad_fit(g, m, {{1, 0}, {0, 2}, {0, 1}}), std::invalid_argument);
  CHECK(default_scale_pairs(4) ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("assouad fit on X_3 with the default series") {
  LaaksoFamily family;
  const LaaksoGraph& g = family.graph(3);
  auto m = all_pairs(g);
  HomogeneityFit fit = assouad_fit(g, m, default_scale_pairs(3));
  CHECK(fit.exponent_s > 1.0);
  CHECK(fit.exponent_s < 1.5);
  CHECK(fit.constant_M > 0.0);
  for (const auto& s : fit.samples) CHECK(s.count >= 1);
}
