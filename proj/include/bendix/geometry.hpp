#pragma once

#include <optional>
#include <string>

#include "bendix/ortho.hpp"
#include "bendix/support.hpp"

namespace bendix {

struct Drawing {
  std::vector<std::pair<double, double>> coords;  // per vertex
  // orthogonal mode: bend points per edge, from edge(e).first
  std::vector<std::vector<std::pair<double, double>>> edge_bends;
};

// Planar straight-line realization of a tree alignment: aligned pairs are
// collinear through their shared vertex, unaligned pairs are not, and no two
// segments intersect except at shared endpoints.
Drawing realize_tree(const PathSupport& support, const Alignment& alignment);

// Convex-cycle realization of a linear cactus support with the alignment
// implied by the paths. In planar mode the per-vertex planarity conditions
// must hold; without it the drawing may cross but still realizes every
// alignment.
Drawing realize_linear_cactus(const PathSupport& support, bool planar);

Drawing from_ortho(const PathSupport& support, const OrthoDrawing& ortho);

struct DrawingReport {
  std::vector<int> per_path_bends;
  int crossings = 0;
  bool alignment_consistent = true;
  bool degenerate = false;
  int max_bends = 0;
  long long total_bends = 0;
};

// Independent geometric oracle: per-path bend counts from direction changes,
// segment-pair intersection tests, and (optionally) consistency with an
// expected alignment.
DrawingReport verify_drawing(const PathSupport& support, const Drawing& drawing,
                             const std::optional<Alignment>& expected = std::nullopt);

// collinearity tolerance: |cross| <= kCollinearTol * |a| * |b|
inline constexpr double kCollinearTol = 1e-9;

}  // namespace bendix
