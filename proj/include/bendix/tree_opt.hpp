#pragma once

#include <map>
#include <optional>

#include "bendix/matching.hpp"
#include "bendix/support.hpp"

namespace bendix {

// Matching instance at one vertex: complete graph on the neighborhood,
// weight of {u, w} = number of paths traversing u-v-w.
struct LocalMatchingInstance {
  int vertex = -1;
  std::vector<int> nodes;  // neighbors of vertex, sorted
  std::vector<std::vector<long long>> weights;
};

LocalMatchingInstance local_matching_instance(const PathSupport& support, int vertex);

// Matched neighbor pairs, max total weight, lexicographically smallest among
// optima; zero-weight pairs are never included.
MatchingResult solve_local_matching(const LocalMatchingInstance& instance);

struct TotalBendsResult {
  Alignment alignment;
  long long total = 0;
};

// Per-vertex maximum-weight matchings; the resulting alignment minimizes the
// sum of bends over all paths.
TotalBendsResult minimize_total_bends(const PathSupport& support);

// Decides whether the (planar) curve complexity is <= b for b in {0, 1} via
// 2-SAT; returns a realizing alignment or nullopt.
std::optional<Alignment> curve_complexity_le(const PathSupport& support, int b);

// Spine-straight alignment of a caterpillar support; every path bends at
// most twice.
Alignment caterpillar_draw(const PathSupport& support);

bool is_caterpillar(const PathSupport& support);
// Spine = non-leaf vertices in path order (empty when the tree has <= 2
// vertices).
std::vector<int> caterpillar_spine(const PathSupport& support);

}  // namespace bendix
