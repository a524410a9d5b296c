// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "laakso/family.hpp"
#include "laakso/scaled.hpp"

namespace laakso {

/// The difference function z -> rho(x, z) - rho(y, z), an element of the
/// sup-norm difference set. Never materialized as a value table; evaluated
/// exactly on demand from the defining pair.
struct DiffFn {
  Point x;
  Point y;
};

/// Finite evaluation grid that realizes sup-norm computations exactly: if
/// every defining point of f - g lives at level <= m, the supremum over the
/// whole limit space is attained on the vertices of X_{m+1} (distance
/// functions restricted to a substituted copy are minima of two unit-slope
/// terms whose breakpoints sit at half-edge positions, and those are
/// level-(m+1) vertices). Caches one BFS row per defining point.
class EvalLattice {
 public:
  EvalLattice(LaaksoFamily& family, int level);

  int level() const { return level_; }
  const LaaksoGraph& graph() const { return *graph_; }

  /// Distances from lift(p) to every lattice vertex, in units 4^{-level}.
  const std::vector<std::int32_t>& row(const Point& p);

 private:
  LaaksoFamily& family_;
  int level_;
  const LaaksoGraph* graph_;
  std::unordered_map<VertexId, std::vector<std::int32_t>> rows_;
};

/// Exact signed evaluation f(z) = rho(x,z) - rho(y,z).
ScaledDistance eval_diff(LaaksoFamily& family, const DiffFn& f, const Point& z);

/// sup |f| over the limit space, computed on the lattice one level below
/// the defining points and checked against the norm identity
/// sup |f_{x,y}| = rho(x, y).
ScaledDistance linf_norm(LaaksoFamily& family, const DiffFn& f);

/// sup |f - g| over the limit space (exact via the lattice).
ScaledDistance linf_dist(LaaksoFamily& family, const DiffFn& f, const DiffFn& g);

/// Same as linf_dist but on a caller-provided lattice, which must be at
/// least one level below every defining point. Exposed for the lattice
/// stability property check.
ScaledDistance linf_dist_on(EvalLattice& lattice, const DiffFn& f, const DiffFn& g);

struct KuratowskiReport {
  int level = 0;
  std::int64_t pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> violations;  // expected empty
};

/// Checks sup_z |rho(x,z) - rho(y,z)| == rho(x,y) for every vertex pair.
KuratowskiReport kuratowski_isometry_check(LaaksoFamily& family, int level);

/// One member per edge cycle: x = the upper side corner Ku, y = the
/// midpoint of the cycle edge between the l and c corners, a level-(i+1)
/// vertex. rho(x,y) = (3/2) * 4^{-i}, strictly between r and 2r.
struct FamilyMember {
  std::string cycle_address;
  std::vector<std::string> cycle_corners;  // labels (b, u, c, l order)
  Point x;
  Point y;
  ScaledDistance norm;
};

struct SeparationFamily {
  int level = 0;  // i; r = 4^{-i}
  ScaledDistance r;
  int eval_level = 0;
  std::vector<FamilyMember> members;
  std::optional<ScaledDistance> min_pairwise;  // empty for a singleton family
  ScaledDistance max_norm;
};

/// Builds and fully verifies the family: |members| = 6^{i-1}, pairwise
/// sup-norm distances >= 4^{-i} (exact, exhaustive), norms < 2 * 4^{-i}.
/// Throws math_check_error naming the offending pair if separation failed.
SeparationFamily separated_family(LaaksoFamily& family, int level);

struct CenterPair {
  Point t;
  Point s;
};

struct PerCenterWitness {
  int index = 0;    // which center pair is defeated
  Point z;          // evaluation point
  ScaledDistance value;  // |f(z) - g_j(z)| >= r
};

/// Evidence that the proposed cover {B(g_j, r)} of B(0, 2r) misses the
/// witness function: a free edge cycle (no center strictly within r of its
/// corners), the witness f built in it with r < ||f|| < 2r, and one exact
/// evaluation >= r against every center.
struct RefutationCertificate {
  int level = 0;  // i; r = 4^{-i}
  ScaledDistance r;
  int eval_level = 0;
  std::vector<CenterPair> centers;
  std::string free_cycle_address;
  std::vector<std::string> free_cycle_corners;
  DiffFn witness;
  ScaledDistance witness_norm;  // < 2r
  std::vector<PerCenterWitness> per_center;
};

struct RefuteOutcome {
  std::optional<RefutationCertificate> certificate;
  std::string not_refuted_reason;  // set when certificate is empty
};

/// Searches for a certificate. A center blocks a cycle when its class lies
/// strictly within r of the cycle's corner set; distinct cycles are >= 2r
/// apart, so each center blocks at most one cycle and a free cycle exists
/// whenever 2 * |centers| < 6^{i-1}. "Not refuted" is a legitimate outcome,
/// not an error: the cover might be genuine.
RefuteOutcome refute_cover(LaaksoFamily& family, int level,
                           const std::vector<CenterPair>& centers);

/// count uniformly random level-i vertex pairs from a seeded generator.
std::vector<CenterPair> random_centers(LaaksoFamily& family, int level, int count,
                                       std::uint64_t seed);

struct GrowthRow {
  int level = 0;
  std::int64_t edge_cycles = 0;
  std::int64_t packing_lower_bound = 0;  // verified family size
  std::optional<ScaledDistance> min_pairwise;
  ScaledDistance max_norm;
  int doubling_max = 0;  // covering-side: stays bounded while packing grows
  int refute_trials = 0;
  int refute_successes = 0;
};

/// The headline contrast: the space's doubling constant stays bounded while
/// B(0, 2 * 4^{-i}) in the difference set contains 6^{i-1} separated points.
/// Runs `trials` seeded random refutations per level i >= 2.
std::vector<GrowthRow> growth_probe(LaaksoFamily& family, int max_level, int trials,
                                    std::uint64_t seed);

}  // namespace laakso
