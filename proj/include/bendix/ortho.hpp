#pragma once

#include <map>

#include "bendix/support.hpp"

namespace bendix {

// Faces of the combinatorial embedding. Dart 2e points from edge(e).first to
// edge(e).second, dart 2e+1 the other way; a face lies to the left of its
// darts.
struct FaceStructure {
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> face_darts;  // traversal order
  std::vector<int> face_degree;
  int outer_face = -1;
  int face_count() const { return static_cast<int>(face_darts.size()); }
};

FaceStructure trace_faces(const PathSupport& support);

struct FlowArc {
  int from = -1, to = -1;
  long long capacity = 0, cost = 0;
  // decode tags
  int edge = -1;    // face-face arc: bends on this edge, convex in `from`
  int vertex = -1;  // vertex-face arc
  int corner = -1;  // rotation corner index at `vertex`
};

// Nodes 0..n-1 are the vertices, n..n+f-1 the faces. A feasible flow has
// inflow(x) - outflow(x) = demand(x).
struct FlowNetwork {
  int vertex_nodes = 0;
  int face_nodes = 0;
  std::vector<long long> demand;
  std::vector<FlowArc> arcs;
  FaceStructure faces;
  int node_count() const { return vertex_nodes + face_nodes; }
};

// Path-aware cost network: face-face arcs cost the number of paths on the
// edge; vertex-face arcs price the path pairs forced to bend by the chosen
// angle.
FlowNetwork build_flow_network(const PathSupport& support);

struct FlowResult {
  bool feasible = false;
  long long cost = 0;
  std::vector<long long> flow;  // per arc
};

// Successive shortest augmenting paths with potentials; exact integral
// minimum cost.
FlowResult min_cost_flow(const FlowNetwork& network);

struct OrthoRepresentation {
  // corner_angle[v][i]: angle between rotation[v][i] and rotation[v][i+1]
  // in quarter turns (1..4)
  std::vector<std::vector<int>> corner_angle;
  // dart_bends[d]: turns along dart d, +1 convex in the left face
  std::vector<std::vector<int>> dart_bends;
  // true iff the two path edges at this interior vertex are aligned
  bool aligned_at(const PathSupport& s, int v, int e1, int e2) const;
};

struct PathBendReport {
  std::vector<int> per_path;
  long long total = 0;
  long long flow_cost = 0;
  long long degree4_constant = 0;
};

std::pair<OrthoRepresentation, PathBendReport> extract_representation(
    const PathSupport& support, const FlowNetwork& network, const FlowResult& flow);

struct OrthoDrawing {
  std::vector<std::pair<long long, long long>> coords;  // per vertex
  // per edge: bend points ordered from edge(e).first to edge(e).second
  std::vector<std::vector<std::pair<long long, long long>>> edge_bends;
};

// Rectangular refinement with dummy vertices followed by longest-path
// layering per axis.
OrthoDrawing compact(const PathSupport& support, const OrthoRepresentation& rep);

}  // namespace bendix
