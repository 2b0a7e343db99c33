#pragma once

#include <optional>
#include <string>

#include "bendix/support.hpp"

namespace bendix {

// Two paths that share an edge at a vertex but continue along different
// edges; such a pattern rules out a zero-bend drawing.
struct SplitWitness {
  int vertex = -1;
  int shared_edge = -1;
  int edge1 = -1;
  int edge2 = -1;
  int path1 = -1;
  int path2 = -1;
};

// Union-find with access counters over the traversing paths of each
// half-edge; returns a witness iff one exists.
std::optional<SplitWitness> detect_split(const PathSupport& support);

struct MergedPathSet {
  std::vector<int> class_of;                   // original path -> class
  std::vector<std::vector<int>> classes;       // member paths per class
  std::vector<int> edge_label;                 // edge -> class
  std::vector<std::vector<int>> merged_verts;  // vertex sequence per class (when a path)
  bool all_paths = true;  // false when some class closes into a cycle
};

// Merges paths sharing an edge; requires a split-free instance.
MergedPathSet merge_shared(const PathSupport& support);

// Same graph with one path per merged class. Requires all classes to be
// simple paths.
PathSupport merged_support(const PathSupport& support, const MergedPathSet& merged);

// True iff no cycle of the cactus carries exactly two distinct labels.
bool two_label_cycle_check(const PathSupport& support, const MergedPathSet& merged);

struct PlanarZeroReport {
  bool ok = true;
  std::vector<std::pair<int, std::string>> issues;  // (vertex, reason)
};

// Planar zero-bend test for a linear cactus support with the alignment
// implied by the paths: (i) at most one cycle aligned per vertex and
// (ii) a bipartite constraint graph wherever a cycle is aligned.
PlanarZeroReport linear_planar_zero(const PathSupport& support);

// detect_split -> merge_shared -> two-label check -> (planar ? per-vertex
// planar conditions : true).
bool zero_curve_complexity(const PathSupport& support, bool planar);

struct SplitPlan {
  std::vector<std::pair<int, int>> splits;  // (path, vertex)
  std::vector<int> per_path_bends;
  std::vector<Path> split_paths;            // fragments, ids "<orig>.k"
  std::vector<int> fragment_of;             // fragment -> original path
};

// Minimum splitting so that the planar zero-bend conditions hold; each
// split is one bend.
SplitPlan min_split_zero_drawing_plan(const PathSupport& support);

PathSupport split_support(const PathSupport& support, const SplitPlan& plan);

}  // namespace bendix
