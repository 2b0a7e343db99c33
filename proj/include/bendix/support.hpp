#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bendix {

enum class Errc {
  NonSimplePath,
  NonAdjacentConsecutive,
  UncoveredEdge,
  InvalidEmbedding,
  DegreeExceeds4,
  Disconnected,
  ParallelEdge,
  SelfLoop,
  UnknownVertex,
  NotATree,
  NotACactus,
  NotACaterpillar,
  NotLinear,
  SplitPresent,
  AlignmentInvalid,
  Infeasible,
  TooLarge,
  UnknownFamily,
  BadInput,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Path {
  std::string id;
  std::vector<int> verts;  // >= 2 vertices, consecutive ones adjacent

  int length() const { return static_cast<int>(verts.size()) - 1; }
  int interior_count() const { return std::max(0, static_cast<int>(verts.size()) - 2); }
};

// Rotation system: rotation[v] lists the neighbors of v in counterclockwise
// order. The outer face lies to the left of the dart outer_dart.first ->
// outer_dart.second.
struct PlaneEmbedding {
  std::vector<std::vector<int>> rotation;
  std::pair<int, int> outer_dart{-1, -1};
};

struct GraphClass {
  enum Kind { Tree, Cactus, Plane4, Other } kind = Other;
  bool linear = false;
};

const char* graph_class_name(GraphClass::Kind k);

// Immutable path-based support: a connected simple graph, a covering set of
// simple paths, and (optionally) a combinatorial embedding. Vertex ids are
// opaque strings; internally vertices and edges are dense indices sorted by
// id so that all derived output is deterministic.
class PathSupport {
 public:
  static PathSupport from_parts(std::vector<std::string> vertex_ids,
                                std::vector<std::pair<std::string, std::string>> edge_ids,
                                std::vector<std::pair<std::string, std::vector<std::string>>> paths,
                                std::optional<PlaneEmbedding> embedding = std::nullopt);

  // Index-level factory, used by generators. Vertex k gets name names[k].
  static PathSupport from_indexed(std::vector<std::string> names,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<Path> paths,
                                  std::optional<PlaneEmbedding> embedding = std::nullopt);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return names_[v]; }
  int vertex_index(const std::string& id) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  int edge_index(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  int edge_other(int e, int v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int p) const { return paths_[p]; }
  int path_count() const { return static_cast<int>(paths_.size()); }
  // Edge ids along path p, in path order.
  const std::vector<int>& path_edges(int p) const { return path_edges_[p]; }
  // Paths that contain edge e.
  const std::vector<int>& paths_on_edge(int e) const { return edge_paths_[e]; }

  const std::optional<PlaneEmbedding>& embedding() const { return embedding_; }

  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;       // canonical (u < v), sorted
  std::vector<std::vector<int>> adj_;            // sorted neighbor lists
  std::vector<std::vector<int>> inc_;            // incident edge ids, sorted
  std::vector<Path> paths_;
  std::vector<std::vector<int>> path_edges_;
  std::vector<std::vector<int>> edge_paths_;
  std::optional<PlaneEmbedding> embedding_;
};

// A set of aligned edge pairs; each pair shares exactly one endpoint and at
// every vertex an edge has at most one partner. Pairs are canonical
// (e1 < e2) and sorted.
struct Alignment {
  std::vector<std::pair<int, int>> pairs;

  void add(int e1, int e2);
  bool aligned(int e1, int e2) const;
  void canonicalize();
};

// Throws AlignmentInvalid if a pair does not share exactly one vertex or an
// edge has two partners at one vertex.
void check_alignment(const PathSupport& support, const Alignment& alignment);

struct BendVector {
  std::vector<long long> counts;  // counts[i] = number of paths with i bends

  void normalize();
  static BendVector from_bends(const std::vector<int>& per_path_bends);
};

// Lexicographic comparison, larger is better: returns -1 if a worse than b,
// 0 if equal, +1 if a better than b.
int compare_bend_vectors(const BendVector& a, const BendVector& b);

struct BendReport {
  std::vector<int> per_path;
  BendVector vector;
  long long total = 0;
  int curve = 0;  // max over paths
};

BendReport count_bends(const PathSupport& support, const Alignment& alignment);

// Classification: validates structural invariants and returns the class plus
// the linearity flag. Throws Error on invalid instances.
GraphClass validate(const PathSupport& support);

bool is_tree(const PathSupport& support);
bool is_cactus(const PathSupport& support);
bool is_linear(const PathSupport& support);
// True when the embedding is present, consistent with the graph, satisfies
// Euler's formula and max degree 4.
bool is_plane4(const PathSupport& support);

// Cycles of a cactus, each as a vertex sequence (first vertex repeated
// nowhere); deterministic order. Throws NotACactus otherwise.
std::vector<std::vector<int>> cactus_cycles(const PathSupport& support);

}  // namespace bendix
