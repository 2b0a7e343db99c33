#pragma once

#include <optional>

#include "bendix/support.hpp"

namespace bendix {

enum class OracleObjective {
  Total,       // minimize sum of bends
  Curve,       // minimize max bends per path
  LexVector,   // lexicographically maximize the bend vector
  FocusPath,   // minimize the bends of one given path
  NaeTargets,  // is (>= n0 zero-bend, >= n1 one-bend) achievable
};

struct OracleOptions {
  std::optional<int> budget;  // per-path bend cap
  bool planar = false;        // additionally require planar zero-bend conditions (cactus)
  bool branch_and_bound = false;
  int max_vertices = 12;
  int max_paths = 8;
  long long max_alignments = 20'000'000;
  int focus_path = -1;
  long long nae_n0 = 0;
  long long nae_n1 = 0;
  double wall_limit_sec = 600.0;
};

struct OracleResult {
  bool feasible = false;
  long long total = -1;
  int curve = -1;
  BendVector vector;
  Alignment witness;
  int focus_bends = -1;
  bool targets_achievable = false;
  long long enumerated = 0;
};

// Exhaustive search over the Cartesian product of per-vertex incident-edge
// matchings (restricted to pairs actually traversed by a path, which never
// changes the optima). On cactus supports every cycle must keep >= 3
// corners; with the planar flag the per-vertex planarity conditions are
// enforced as well. Branch-and-bound mode lifts the size caps and prunes on
// the per-path budget.
OracleResult oracle_solve(const PathSupport& support, OracleObjective objective,
                          const OracleOptions& options = {});

}  // namespace bendix
