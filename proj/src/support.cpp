#include "bendix/support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace bendix {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonSimplePath: return "NonSimplePath";
    case Errc::NonAdjacentConsecutive: return "NonAdjacentConsecutive";
    case Errc::UncoveredEdge: return "UncoveredEdge";
    case Errc::InvalidEmbedding: return "InvalidEmbedding";
    case Errc::DegreeExceeds4: return "DegreeExceeds4";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ParallelEdge: return "ParallelEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotATree: return "NotATree";
    case Errc::NotACactus: return "NotACactus";
    case Errc::NotACaterpillar: return "NotACaterpillar";
    case Errc::NotLinear: return "NotLinear";
    case Errc::SplitPresent: return "SplitPresent";
    case Errc::AlignmentInvalid: return "AlignmentInvalid";
    case Errc::Infeasible: return "Infeasible";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

const char* graph_class_name(GraphClass::Kind k) {
  switch (k) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Cactus: return "cactus";
    case GraphClass::Plane4: return "plane4";
    case GraphClass::Other: return "other";
  }
  return "other";
}

PathSupport PathSupport::from_parts(
    std::vector<std::string> vertex_ids,
    std::vector<std::pair<std::string, std::string>> edge_ids,
    std::vector<std::pair<std::string, std::vector<std::string>>> paths,
    std::optional<PlaneEmbedding> embedding) {
  std::vector<std::string> names = vertex_ids;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw Error(Errc::BadInput, "duplicate vertex id");
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(Errc::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_ids.size());
  for (const auto& [a, b] : edge_ids) edges.emplace_back(lookup(a), lookup(b));
  std::vector<Path> ps;
  ps.reserve(paths.size());
  for (auto& [id, vs] : paths) {
    Path p;
    p.id = id;
    for (const auto& v : vs) p.verts.push_back(lookup(v));
    ps.push_back(std::move(p));
  }
  return from_indexed(std::move(names), std::move(edges), std::move(ps), std::move(embedding));
}

PathSupport PathSupport::from_indexed(std::vector<std::string> names,
                                      std::vector<std::pair<int, int>> edges,
                                      std::vector<Path> paths,
                                      std::optional<PlaneEmbedding> embedding) {
  PathSupport s;
  s.names_ = std::move(names);
  const int n = s.vertex_count();
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(Errc::UnknownVertex, "edge endpoint out of range");
    if (a == b) throw Error(Errc::SelfLoop, "self-loop at '" + s.names_[a] + "'");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(Errc::ParallelEdge, "duplicate edge");
  s.edges_ = std::move(edges);
  s.adj_.assign(n, {});
  s.inc_.assign(n, {});
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [a, b] = s.edges_[e];
    s.adj_[a].push_back(b);
    s.adj_[b].push_back(a);
    s.inc_[a].push_back(e);
    s.inc_[b].push_back(e);
  }
  s.paths_ = std::move(paths);
  s.path_edges_.resize(s.paths_.size());
  s.edge_paths_.assign(s.edge_count(), {});
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.paths_[p].verts;
    if (verts.size() < 2) throw Error(Errc::NonSimplePath, "path '" + s.paths_[p].id + "' has fewer than 2 vertices");
    std::set<int> seen;
    for (int v : verts) {
      if (v < 0 || v >= n) throw Error(Errc::UnknownVertex, "path vertex out of range");
      if (!seen.insert(v).second)
        throw Error(Errc::NonSimplePath, "path '" + s.paths_[p].id + "' repeats a vertex");
    }
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
      int e = s.edge_index(verts[i], verts[i + 1]);
      if (e < 0)
        throw Error(Errc::NonAdjacentConsecutive,
                    "path '" + s.paths_[p].id + "' uses a missing edge " + s.names_[verts[i]] +
                        "-" + s.names_[verts[i + 1]]);
      s.path_edges_[p].push_back(e);
      s.edge_paths_[e].push_back(p);
    }
  }
  s.embedding_ = std::move(embedding);
  return s;
}

int PathSupport::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return -1;
  return static_cast<int>(it - names_.begin());
}

int PathSupport::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool PathSupport::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == vertex_count();
}

void Alignment::add(int e1, int e2) {
  if (e1 > e2) std::swap(e1, e2);
  pairs.emplace_back(e1, e2);
}

bool Alignment::aligned(int e1, int e2) const {
  if (e1 > e2) std::swap(e1, e2);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(e1, e2));
}

void Alignment::canonicalize() {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

namespace {

// Shared endpoint of two distinct edges, or -1.
int shared_vertex(const PathSupport& s, int e1, int e2) {
  auto [a, b] = s.edge(e1);
  auto [c, d] = s.edge(e2);
  if (a == c || a == d) return a;
  if (b == c || b == d) return b;
  return -1;
}

}  // namespace

void check_alignment(const PathSupport& support, const Alignment& alignment) {
  std::set<std::pair<int, int>> used;  // (vertex, edge)
  for (auto [e1, e2] : alignment.pairs) {
    if (e1 == e2 || e1 < 0 || e2 < 0 || e1 >= support.edge_count() || e2 >= support.edge_count())
      throw Error(Errc::AlignmentInvalid, "bad edge pair");
    int v = shared_vertex(support, e1, e2);
    if (v < 0) throw Error(Errc::AlignmentInvalid, "pair of non-incident edges");
    if (!used.insert({v, e1}).second || !used.insert({v, e2}).second)
      throw Error(Errc::AlignmentInvalid,
                  "edge has two partners at vertex '" + support.vertex_name(v) + "'");
  }
}

void BendVector::normalize() {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

BendVector BendVector::from_bends(const std::vector<int>& per_path_bends) {
  BendVector v;
  for (int b : per_path_bends) {
    if (b >= static_cast<int>(v.counts.size())) v.counts.resize(b + 1, 0);
    ++v.counts[b];
  }
  v.normalize();
  return v;
}

int compare_bend_vectors(const BendVector& a, const BendVector& b) {
  size_t n = std::max(a.counts.size(), b.counts.size());
  for (size_t i = 0; i < n; ++i) {
    long long x = i < a.counts.size() ? a.counts[i] : 0;
    long long y = i < b.counts.size() ? b.counts[i] : 0;
    if (x != y) return x > y ? 1 : -1;
  }
  return 0;
}

BendReport count_bends(const PathSupport& support, const Alignment& alignment) {
  check_alignment(support, alignment);
  BendReport report;
  report.per_path.assign(support.path_count(), 0);
  for (int p = 0; p < support.path_count(); ++p) {
    const auto& es = support.path_edges(p);
    int bends = 0;
    for (size_t i = 0; i + 1 < es.size(); ++i)
      if (!alignment.aligned(es[i], es[i + 1])) ++bends;
    report.per_path[p] = bends;
    report.total += bends;
    report.curve = std::max(report.curve, bends);
  }
  report.vector = BendVector::from_bends(report.per_path);
  return report;
}

bool is_tree(const PathSupport& s) {
  return s.connected() && s.edge_count() == s.vertex_count() - 1;
}

namespace {

// Biconnected components via iterative Tarjan; each component is a list of
// edge ids.
std::vector<std::vector<int>> biconnected_components(const PathSupport& s) {
  int n = s.vertex_count();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> edge_stack;
  int counter = 0;
  // frames: vertex, parent edge, next incident index
  struct Frame {
    int v, parent_edge;
    size_t next;
  };
  for (int start = 0; start < n; ++start) {
    if (num[start] >= 0) continue;
    std::vector<Frame> stack{{start, -1, 0}};
    num[start] = low[start] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < s.incident_edges(f.v).size()) {
        int e = s.incident_edges(f.v)[f.next++];
        if (e == f.parent_edge) continue;
        int w = s.edge_other(e, f.v);
        if (num[w] < 0) {
          edge_stack.push_back(e);
          num[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else if (num[w] < num[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // pop component ending with pe
          std::vector<int> comp;
          while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == pe) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

bool is_cactus(const PathSupport& s) {
  if (!s.connected()) return false;
  for (const auto& comp : biconnected_components(s)) {
    if (comp.size() == 1) continue;
    // a biconnected component is a simple cycle iff #edges == #vertices
    std::set<int> verts;
    for (int e : comp) {
      verts.insert(s.edge(e).first);
      verts.insert(s.edge(e).second);
    }
    if (comp.size() != verts.size()) return false;
  }
  return true;
}

bool is_linear(const PathSupport& s) {
  for (int p = 0; p < s.path_count(); ++p)
    for (int q = p + 1; q < s.path_count(); ++q) {
      std::set<int> pv(s.path(p).verts.begin(), s.path(p).verts.end());
      int shared = 0;
      for (int v : s.path(q).verts)
        if (pv.count(v) && ++shared > 1) return false;
    }
  return true;
}

namespace {

void check_embedding(const PathSupport& s) {
  const auto& emb = *s.embedding();
  if (static_cast<int>(emb.rotation.size()) != s.vertex_count())
    throw Error(Errc::InvalidEmbedding, "rotation must cover every vertex");
  for (int v = 0; v < s.vertex_count(); ++v) {
    std::vector<int> rot = emb.rotation[v];
    std::vector<int> want = s.adj(v);
    std::sort(rot.begin(), rot.end());
    if (rot != want)
      throw Error(Errc::InvalidEmbedding,
                  "rotation at '" + s.vertex_name(v) + "' does not list the incident edges");
  }
  auto [ou, ov] = emb.outer_dart;
  if (ou < 0 || ov < 0 || s.edge_index(ou, ov) < 0)
    throw Error(Errc::InvalidEmbedding, "outer face edge is not an edge");
  // Euler check: count face orbits of the dart permutation.
  // successor of dart (u,v): (v,w) where w precedes u in ccw rotation at v.
  int m = s.edge_count();
  std::vector<char> seen(2 * m, 0);
  auto dart_id = [&](int e, int from) { return 2 * e + (s.edge(e).first == from ? 0 : 1); };
  int faces = 0;
  for (int d = 0; d < 2 * m; ++d) {
    if (seen[d]) continue;
    ++faces;
    int cur = d;
    int guard = 0;
    while (!seen[cur]) {
      seen[cur] = 1;
      int e = cur / 2;
      int from = cur % 2 == 0 ? s.edge(e).first : s.edge(e).second;
      int to = s.edge_other(e, from);
      const auto& rot = emb.rotation[to];
      auto it = std::find(rot.begin(), rot.end(), from);
      int idx = static_cast<int>(it - rot.begin());
      int w = rot[(idx + rot.size() - 1) % rot.size()];
      cur = dart_id(s.edge_index(to, w), to);
      if (++guard > 2 * m + 1) throw Error(Errc::InvalidEmbedding, "rotation is not a permutation");
    }
  }
  if (s.vertex_count() - m + faces != 2)
    throw Error(Errc::InvalidEmbedding, "rotation system is not planar (Euler check failed)");
}

}  // namespace

bool is_plane4(const PathSupport& s) {
  if (!s.embedding()) return false;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) > 4) return false;
  try {
    check_embedding(s);
  } catch (const Error&) {
    return false;
  }
  return true;
}

GraphClass validate(const PathSupport& s) {
  if (!s.connected()) throw Error(Errc::Disconnected, "support graph must be connected");
  for (int e = 0; e < s.edge_count(); ++e)
    if (s.paths_on_edge(e).empty())
      throw Error(Errc::UncoveredEdge, "edge " + s.vertex_name(s.edge(e).first) + "-" +
                                           s.vertex_name(s.edge(e).second) +
                                           " lies on no path");
  if (s.embedding()) {
    check_embedding(s);
    for (int v = 0; v < s.vertex_count(); ++v)
      if (s.degree(v) > 4)
        throw Error(Errc::DegreeExceeds4, "vertex '" + s.vertex_name(v) + "' has degree > 4");
  }
  GraphClass c;
  c.linear = is_linear(s);
  if (is_tree(s))
    c.kind = GraphClass::Tree;
  else if (is_cactus(s))
    c.kind = GraphClass::Cactus;
  else if (is_plane4(s))
    c.kind = GraphClass::Plane4;
  else
    c.kind = GraphClass::Other;
  return c;
}

std::vector<std::vector<int>> cactus_cycles(const PathSupport& s) {
  if (!is_cactus(s)) throw Error(Errc::NotACactus, "support graph is not a cactus");
  std::vector<std::vector<int>> cycles;
  for (const auto& comp : biconnected_components(s)) {
    if (comp.size() <= 1) continue;
    // order the component's vertices around the cycle, starting at the
    // smallest vertex, second = smaller neighbor
    std::map<int, std::vector<int>> nb;
    for (int e : comp) {
      auto [a, b] = s.edge(e);
      nb[a].push_back(b);
      nb[b].push_back(a);
    }
    int start = nb.begin()->first;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    do {
      auto ns = nb[cur];
      std::sort(ns.begin(), ns.end());
      int next = (ns[0] == prev) ? ns[1] : ns[0];
      prev = cur;
      cur = next;
      if (cur != start) order.push_back(cur);
    } while (cur != start);
    cycles.push_back(std::move(order));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace bendix
