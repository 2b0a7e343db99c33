#pragma once

#include <map>
#include <optional>
#include <string>

#include "bendix/support.hpp"

namespace bendix {

struct DpResult {
  bool feasible = false;
  int curve = -1;     // curve mode: achieved minimum complexity (<= budget)
  BendVector vector;  // lex mode: lexicographically maximal bend vector
  Alignment alignment;
};

// Bottom-up record dynamic program over a rooted orientation; per vertex all
// matchings of the active edges are combined with the child records, records
// exceeding the per-path budget are rejected and duplicate records keep the
// better quality.
DpResult dp_curve_complexity(const PathSupport& support, int budget);

// budget loop b = 0, 1, 2, ... capped by the longest path interior
DpResult dp_curve_complexity_opt(const PathSupport& support);

// Same record machinery with the quality replaced by the partial bend
// vector of completed paths; cap defaults to the longest path interior.
DpResult dp_lex_bend_vector(const PathSupport& support, std::optional<int> cap = std::nullopt);

// Cactus extension: the DP runs on the spanning tree obtained by removing
// one root-incident edge per cycle, keeps a per-cycle corner counter in
// {0,1,2,>=3}, and in planar mode checks the per-vertex planarity
// conditions before accepting a record. Trees are accepted as degenerate
// cacti.
DpResult dp_cactus_curve(const PathSupport& support, int budget, bool planar);
DpResult dp_cactus_curve_opt(const PathSupport& support, bool planar);
DpResult dp_cactus_lex(const PathSupport& support, std::optional<int> cap, bool planar);

struct KernelResult {
  PathSupport reduced;
  std::map<std::string, std::string> path_provenance;  // reduced id -> original id
  std::vector<std::string> removed_vertices;
};

// Kernel by |P|: suppress degree-2 vertices, extending paths that end there;
// the result has fewer than 4|P| vertices and the same curve complexity.
KernelResult kernel_by_path_count(const PathSupport& support);

// Kernel by vertex cover: keeps at most six paths per distinct subpath of
// the leaf-stripped tree, then drops leaves hosting no retained path.
KernelResult kernel_by_vertex_cover(const PathSupport& support);

// Exact minimum vertex cover of a tree, avoiding leaves where an internal
// alternative exists.
std::vector<int> min_vertex_cover_tree(const PathSupport& support);

int leaf_stripped_vertex_count(const PathSupport& support);

}  // namespace bendix
