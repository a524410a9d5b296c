// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "laakso/errors.hpp"

namespace laakso {

namespace {

// d units at exponent level, compared exactly against a ScaledDistance.
bool unit_le(std::int64_t d_units, int level, ScaledDistance r) {
  return ScaledDistance::units(d_units, level) <= r;
}

using Word = std::uint64_t;

struct BitSet {
  std::vector<Word> w;
  explicit BitSet(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (Word x : w) c += std::popcount(x);
    return c;
  }
  bool intersects(const BitSet& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  int count_and(const BitSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  void and_not(const BitSet& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  bool none() const {
    for (Word x : w)
      if (x) return false;
    return true;
  }
  bool subset_of(const BitSet& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  friend bool operator==(const BitSet& a, const BitSet& b) { return a.w == b.w; }
};

struct Instance {
  std::size_t universe = 0;                 // indices into problem.target
  std::vector<VertexId> set_center;         // candidate center per set
  std::vector<BitSet> sets;                 // coverage of the target
};

Instance build_instance(const CoverProblem& p) {
  if (p.graph == nullptr || p.matrix == nullptr)
    throw std::invalid_argument("cover: missing graph or matrix");
  if (p.target.empty()) throw std::invalid_argument("cover: empty target");
  if (!(p.radius > ScaledDistance::zero())) throw std::invalid_argument("cover: radius must be positive");

  Instance in;
  in.universe = p.target.size();
  const int level = p.graph->unit_exponent();
  std::vector<VertexId> cands = p.candidate_centers;
  if (cands.empty()) {
    cands.resize(p.graph->vertex_count());
    std::iota(cands.begin(), cands.end(), 0);
  }
  for (VertexId c : cands) {
    BitSet s(in.universe);
    bool any = false;
    auto row = p.matrix->row(c);
    for (std::size_t t = 0; t < in.universe; ++t) {
      if (unit_le(row[p.target[t]], level, p.radius)) {
        s.set(t);
        any = true;
      }
    }
    if (any) {
      in.set_center.push_back(c);
      in.sets.push_back(std::move(s));
    }
  }
  return in;
}

CoverResult greedy_on(const Instance& in, std::size_t universe) {
  CoverResult res;
  BitSet uncovered(universe);
  for (std::size_t t = 0; t < universe; ++t) uncovered.set(t);
  while (!uncovered.none()) {
    int best = -1, best_count = 0;
    for (std::size_t s = 0; s < in.sets.size(); ++s) {
      int c = in.sets[s].count_and(uncovered);
      if (c > best_count) {
        best_count = c;
        best = static_cast<int>(s);
      }
    }
    if (best < 0) throw std::invalid_argument("cover: candidates cannot cover the target");
    uncovered.and_not(in.sets[best]);
    res.centers.push_back(in.set_center[best]);
  }
  return res;
}

struct Bnb {
  const Instance& in;
  std::vector<int> element_set_count;  // how many sets contain each element
  std::uint64_t work_limit;
  std::uint64_t work = 0;
  bool aborted = false;
  int best;
  std::vector<int> best_sets, chosen;
  int max_set_size = 1;

  Bnb(const Instance& inst, int ub, std::uint64_t limit) : in(inst), work_limit(limit), best(ub) {
    element_set_count.assign(inst.universe, 0);
    for (const auto& s : inst.sets)
      for (std::size_t t = 0; t < inst.universe; ++t)
        if (s.test(t)) ++element_set_count[t];
    for (const auto& s : inst.sets) max_set_size = std::max(max_set_size, s.count());
  }

  void run(BitSet& uncovered) {
    if (aborted) return;
    if (++work > work_limit) {
      aborted = true;
      return;
    }
    int unc = uncovered.count();
    if (unc == 0) {
      if (static_cast<int>(chosen.size()) < best) {
        best = static_cast<int>(chosen.size());
        best_sets = chosen;
      }
      return;
    }
    int lower = (unc + max_set_size - 1) / max_set_size;
    if (static_cast<int>(chosen.size()) + lower >= best) return;

    // Branch on the uncovered element with the fewest covering sets.
    std::size_t pivot = 0;
    int fewest = -1;
    for (std::size_t t = 0; t < in.universe; ++t) {
      if (!uncovered.test(t)) continue;
      if (fewest < 0 || element_set_count[t] < fewest) {
        fewest = element_set_count[t];
        pivot = t;
      }
    }
    std::vector<std::pair<int, int>> options;  // (-gain, set index)
    for (std::size_t s = 0; s < in.sets.size(); ++s) {
      if (in.sets[s].test(pivot)) options.push_back({-in.sets[s].count_and(uncovered), static_cast<int>(s)});
    }
    std::sort(options.begin(), options.end());
    for (auto [neg_gain, s] : options) {
      (void)neg_gain;
      BitSet next = uncovered;
      next.and_not(in.sets[s]);
      chosen.push_back(s);
      run(next);
      chosen.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

std::vector<VertexId> ball(const LaaksoGraph& g, const DistanceMatrix& m, VertexId center,
                           ScaledDistance r) {
  if (center >= g.vertex_count()) throw std::invalid_argument("ball: unknown vertex");
  if (!(r > ScaledDistance::zero())) throw std::invalid_argument("ball: radius must be positive");
  std::vector<VertexId> out;
  auto row = m.row(center);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (unit_le(row[v], g.unit_exponent(), r)) out.push_back(v);
  }
  return out;
}

CoverResult greedy_cover(const CoverProblem& problem) {
  Instance in = build_instance(problem);
  return greedy_on(in, problem.target.size());
}

CoverResult min_cover_exact(const CoverProblem& problem, std::uint64_t work_limit) {
  Instance in = build_instance(problem);
  CoverResult greedy = greedy_on(in, problem.target.size());
  if (greedy.centers.size() <= 1) {
    greedy.exact = true;
    return greedy;
  }

  // Dedupe identical sets, drop strictly dominated ones.
  {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < in.sets.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < in.sets.size() && !drop; ++j) {
        if (i == j) continue;
        if (in.sets[i].subset_of(in.sets[j])) {
          // Proper subset, or equal with a later index: keep the first.
          if (!(in.sets[j].subset_of(in.sets[i])) || j < i) drop = true;
        }
      }
      if (!drop) keep.push_back(i);
    }
    Instance pruned;
    pruned.universe = in.universe;
    for (std::size_t i : keep) {
      pruned.set_center.push_back(in.set_center[i]);
      pruned.sets.push_back(in.sets[i]);
    }
    in = std::move(pruned);
  }

  Bnb bnb(in, static_cast<int>(greedy.centers.size()), work_limit);
  BitSet uncovered(in.universe);
  for (std::size_t t = 0; t < in.universe; ++t) uncovered.set(t);
  bnb.run(uncovered);

  if (bnb.aborted) {
    greedy.exact = false;
    greedy.work = bnb.work;
    return greedy;
  }
  CoverResult res;
  res.exact = true;
  res.work = bnb.work;
  if (bnb.best_sets.empty()) {
    res.centers = greedy.centers;  // greedy was already optimal
  } else {
    for (int s : bnb.best_sets) res.centers.push_back(in.set_center[s]);
  }
  return res;
}

DoublingReport doubling_report(const LaaksoGraph& g, const DistanceMatrix& m,
                               const std::vector<int>& radius_exponents,
                               std::uint64_t work_limit) {
  DoublingReport report;
  report.level = g.level();
  for (int mexp : radius_exponents) {
    if (mexp < 0 || mexp > g.level())
      throw std::invalid_argument("doubling_report: radius exponent must be in [0, level]");
    ScaledDistance r = ScaledDistance::units(ScaledDistance::pow4(g.level() - mexp), g.level());
    ScaledDistance half = ScaledDistance::units(2 * ScaledDistance::pow4(g.level() - mexp),
                                                g.level() + 1);
    // r >= diameter makes every ball the whole space; solve that once.
    bool whole = ScaledDistance::pow4(g.level() - mexp) >= ScaledDistance::pow4(g.level());
    std::optional<CoverResult> shared;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      CoverResult res;
      if (whole && shared) {
        res = *shared;
      } else {
        CoverProblem p;
        p.graph = &g;
        p.matrix = &m;
        p.target = ball(g, m, x, r);
        p.radius = half;
        res = min_cover_exact(p, work_limit);
        if (whole) shared = res;
      }
      DoublingEntry e;
      e.center = x;
      e.radius = r;
      e.cover_size = static_cast<int>(res.centers.size());
      e.exact = res.exact;
      report.entries.push_back(e);
      report.max_cover_size = std::max(report.max_cover_size, e.cover_size);
    }
  }
  return report;
}

std::vector<std::pair<int, int>> default_scale_pairs(int level) {
  if (level < 2) throw std::invalid_argument("default_scale_pairs: need level >= 2");
  int hi = level >= 4 ? level - 1 : level;
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= hi; ++m) pairs.push_back({0, m});
  return pairs;
}

HomogeneityFit assouad_fit(const LaaksoGraph& g, const DistanceMatrix& m,
                           const std::vector<std::pair<int, int>>& scale_pairs,
                           const std::vector<VertexId>& subset) {
  if (scale_pairs.size() < 3) throw std::invalid_argument("assouad_fit: need at least 3 scale pairs");
  std::vector<VertexId> A = subset;
  if (A.empty()) {
    A.resize(g.vertex_count());
    std::iota(A.begin(), A.end(), 0);
  }
  std::vector<char> inA(g.vertex_count(), 0);
  for (VertexId v : A) inA[v] = 1;

  HomogeneityFit fit;
  for (auto [m1, m2] : scale_pairs) {
    if (!(0 <= m1 && m1 < m2 && m2 <= g.level()))
      throw std::invalid_argument("assouad_fit: scale pair must satisfy 0 <= m1 < m2 <= level");
    std::int64_t R = ScaledDistance::pow4(g.level() - m1);
    ScaledDistance rho = ScaledDistance::units(ScaledDistance::pow4(g.level() - m2), g.level());
    bool whole = R >= ScaledDistance::pow4(g.level());

    HomogeneitySample sample;
    sample.big_exponent = m1;
    sample.small_exponent = m2;
    sample.whole_space = whole;

    auto solve = [&](VertexId x) -> std::pair<int, bool> {
      CoverProblem p;
      p.graph = &g;
      p.matrix = &m;
      p.radius = rho;
      if (whole) {
        p.target = A;
      } else {
        auto row = m.row(x);
        for (VertexId v : A)
          if (row[v] <= R) p.target.push_back(v);
      }
      // Exact only on small universes; the fit tolerates greedy elsewhere.
      if (p.target.size() <= 48) {
        CoverResult r = min_cover_exact(p, 2'000'000);
        return {static_cast<int>(r.centers.size()), r.exact};
      }
      CoverResult r = greedy_cover(p);
      return {static_cast<int>(r.centers.size()), false};
    };

    if (whole) {
      auto [n, exact] = solve(A.front());
      sample.count = n;
      sample.exact = exact;
      sample.worst_center = A.front();
    } else {
      for (VertexId x : A) {
        auto [n, exact] = solve(x);
        if (n > sample.count) {
          sample.count = n;
          sample.exact = exact;
          sample.worst_center = x;
        }
      }
    }
    fit.samples.push_back(sample);
  }

  // Least squares of log N on log(R/rho).
  double log4 = std::log(4.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = fit.samples.size();
  for (const auto& s : fit.samples) {
    double x = (s.small_exponent - s.big_exponent) * log4;
    double y = std::log(static_cast<double>(s.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = sxx - sx * sx / n;
  if (denom <= 1e-12)
    throw std::invalid_argument("assouad_fit: degenerate regression, all scale ratios equal");
  fit.exponent_s = (sxy - sx * sy / n) / denom;
  double intercept = (sy - fit.exponent_s * sx) / n;
  fit.constant_M = std::exp(intercept);
  double rss = 0;
  for (const auto& s : fit.samples) {
    double x = (s.small_exponent - s.big_exponent) * log4;
    double y = std::log(static_cast<double>(s.count));
    double e = y - (fit.exponent_s * x + intercept);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

std::vector<VertexId> greedy_separated_subset(const DistanceMatrix& m,
                                              const std::vector<VertexId>& target,
                                              ScaledDistance min_sep) {
  std::vector<VertexId> out;
  for (VertexId v : target) {
    bool ok = true;
    for (VertexId u : out) {
      if (ScaledDistance::units(m.units(u, v), m.unit_exponent()) < min_sep) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace laakso
