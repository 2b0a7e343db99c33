#include "bendix/ortho.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <functional>
#include <set>

namespace bendix {

namespace {

int dart_from(const PathSupport& s, int d) {
  auto [a, b] = s.edge(d / 2);
  return d % 2 == 0 ? a : b;
}

int dart_to(const PathSupport& s, int d) {
  auto [a, b] = s.edge(d / 2);
  return d % 2 == 0 ? b : a;
}

int dart_id(const PathSupport& s, int from, int to) {
  int e = s.edge_index(from, to);
  return 2 * e + (s.edge(e).first == from ? 0 : 1);
}

}  // namespace

FaceStructure trace_faces(const PathSupport& s) {
  if (!s.embedding()) throw Error(Errc::InvalidEmbedding, "embedding required");
  const auto& emb = *s.embedding();
  int m = s.edge_count();
  FaceStructure fs;
  fs.face_of_dart.assign(2 * m, -1);
  for (int d = 0; d < 2 * m; ++d) {
    if (fs.face_of_dart[d] >= 0) continue;
    int id = fs.face_count();
    fs.face_darts.push_back({});
    int cur = d;
    while (fs.face_of_dart[cur] < 0) {
      fs.face_of_dart[cur] = id;
      fs.face_darts[id].push_back(cur);
      int to = dart_to(s, cur);
      const auto& rot = emb.rotation[to];
      auto it = std::find(rot.begin(), rot.end(), dart_from(s, cur));
      int idx = static_cast<int>(it - rot.begin());
      int w = rot[(idx + rot.size() - 1) % rot.size()];
      cur = dart_id(s, to, w);
    }
  }
  fs.face_degree.resize(fs.face_count());
  for (int f = 0; f < fs.face_count(); ++f)
    fs.face_degree[f] = static_cast<int>(fs.face_darts[f].size());
  fs.outer_face = fs.face_of_dart[dart_id(s, emb.outer_dart.first, emb.outer_dart.second)];
  return fs;
}

namespace {

// number of paths containing both edges
long long pair_weight(const PathSupport& s, int e1, int e2) {
  long long k = 0;
  for (int p : s.paths_on_edge(e1)) {
    const auto& es = s.path_edges(p);
    if (std::find(es.begin(), es.end(), e2) != es.end()) ++k;
  }
  return k;
}

}  // namespace

FlowNetwork build_flow_network(const PathSupport& s) {
  if (!is_plane4(s))
    throw Error(Errc::InvalidEmbedding, "a valid plane embedding with max degree 4 is required");
  const auto& emb = *s.embedding();
  FlowNetwork net;
  net.faces = trace_faces(s);
  net.vertex_nodes = s.vertex_count();
  net.face_nodes = net.faces.face_count();
  net.demand.assign(net.node_count(), 0);
  for (int v = 0; v < s.vertex_count(); ++v) net.demand[v] = s.degree(v) - 4;
  for (int f = 0; f < net.face_nodes; ++f)
    net.demand[net.vertex_nodes + f] =
        net.faces.face_degree[f] + (f == net.faces.outer_face ? 4 : -4);

  const long long kInf = [&] {
    long long sum = 0;
    for (long long d : net.demand) sum += std::abs(d);
    return std::max<long long>(sum, 4);
  }();

  // face <-> face arcs
  for (int e = 0; e < s.edge_count(); ++e) {
    int f0 = net.faces.face_of_dart[2 * e];
    int f1 = net.faces.face_of_dart[2 * e + 1];
    if (f0 == f1) continue;  // bend on a bridge never helps
    long long k = static_cast<long long>(s.paths_on_edge(e).size());
    FlowArc a;
    a.edge = e;
    a.capacity = kInf;
    a.cost = k;
    a.from = net.vertex_nodes + f0;
    a.to = net.vertex_nodes + f1;
    net.arcs.push_back(a);
    std::swap(a.from, a.to);
    net.arcs.push_back(a);
  }

  // vertex -> face arcs per rotation corner
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& rot = emb.rotation[v];
    int deg = static_cast<int>(rot.size());
    if (deg == 4) continue;
    for (int i = 0; i < deg; ++i) {
      int f = net.faces.face_of_dart[dart_id(s, v, rot[i])];
      FlowArc a;
      a.vertex = v;
      a.corner = i;
      a.from = v;
      a.to = net.vertex_nodes + f;
      if (deg == 1) {
        a.capacity = 3;
        a.cost = 0;
        net.arcs.push_back(a);
      } else if (deg == 2) {
        a.capacity = 1;
        a.cost = 0;
        net.arcs.push_back(a);
        a.cost = pair_weight(s, s.edge_index(v, rot[0]), s.edge_index(v, rot[1]));
        net.arcs.push_back(a);
      } else {  // deg == 3
        int e1 = s.edge_index(v, rot[i]);
        int e2 = s.edge_index(v, rot[(i + 1) % 3]);
        int e3 = s.edge_index(v, rot[(i + 2) % 3]);
        a.capacity = 1;
        a.cost = pair_weight(s, e1, e3) + pair_weight(s, e2, e3);
        net.arcs.push_back(a);
      }
    }
  }
  return net;
}

FlowResult min_cost_flow(const FlowNetwork& net) {
  long long balance = 0;
  for (long long d : net.demand) balance += d;
  if (balance != 0) throw Error(Errc::BadInput, "demands must sum to zero");

  int n = net.node_count() + 2;
  int src = net.node_count(), dst = net.node_count() + 1;
  struct Res {
    int to;
    long long cap, cost;
    int rev;
    int arc;  // original arc index or -1
  };
  std::vector<std::vector<Res>> g(n);
  auto add = [&](int a, int b, long long cap, long long cost, int arc) {
    g[a].push_back({b, cap, cost, static_cast<int>(g[b].size()), arc});
    g[b].push_back({a, 0, -cost, static_cast<int>(g[a].size()) - 1, -1});
  };
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    add(a.from, a.to, a.capacity, a.cost, static_cast<int>(i));
  }
  long long need = 0;
  for (int x = 0; x < net.node_count(); ++x) {
    // inflow - outflow = demand: positive demands absorb flow
    if (net.demand[x] > 0) {
      add(x, dst, net.demand[x], 0, -1);
      need += net.demand[x];
    } else if (net.demand[x] < 0) {
      add(src, x, -net.demand[x], 0, -1);
    }
  }

  FlowResult result;
  long long sent = 0;
  const long long kInf = (long long)4e18;
  while (sent < need) {
    // Bellman-Ford (residual costs may be negative)
    std::vector<long long> dist(n, kInf);
    std::vector<int> pv(n, -1), pe(n, -1);
    std::vector<char> inq(n, 0);
    std::deque<int> q{src};
    dist[src] = 0;
    inq[src] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      inq[x] = 0;
      for (size_t i = 0; i < g[x].size(); ++i) {
        const Res& r = g[x][i];
        if (r.cap <= 0 || dist[x] + r.cost >= dist[r.to]) continue;
        dist[r.to] = dist[x] + r.cost;
        pv[r.to] = x;
        pe[r.to] = static_cast<int>(i);
        if (!inq[r.to]) {
          inq[r.to] = 1;
          q.push_back(r.to);
        }
      }
    }
    if (dist[dst] >= kInf) break;
    long long push = need - sent;
    for (int x = dst; x != src; x = pv[x]) push = std::min(push, g[pv[x]][pe[x]].cap);
    for (int x = dst; x != src; x = pv[x]) {
      Res& r = g[pv[x]][pe[x]];
      r.cap -= push;
      g[x][r.rev].cap += push;
    }
    sent += push;
    result.cost += push * dist[dst];
  }
  result.feasible = sent == need;
  result.flow.assign(net.arcs.size(), 0);
  for (int x = 0; x < n; ++x)
    for (const Res& r : g[x])
      if (r.arc >= 0) {
        // remaining capacity tells how much was used
        long long used = net.arcs[r.arc].capacity - r.cap;
        result.flow[r.arc] = used;
      }
  if (!result.feasible) result.cost = -1;
  return result;
}

bool OrthoRepresentation::aligned_at(const PathSupport& s, int v, int e1, int e2) const {
  const auto& rot = s.embedding()->rotation[v];
  int deg = static_cast<int>(rot.size());
  int i1 = -1, i2 = -1;
  for (int i = 0; i < deg; ++i) {
    if (s.edge_index(v, rot[i]) == e1) i1 = i;
    if (s.edge_index(v, rot[i]) == e2) i2 = i;
  }
  if (i1 < 0 || i2 < 0) throw Error(Errc::BadInput, "edges not incident to vertex");
  int sum = 0;
  for (int i = i1; i != i2; i = (i + 1) % deg) sum += corner_angle[v][i];
  return sum == 2;
}

std::pair<OrthoRepresentation, PathBendReport> extract_representation(
    const PathSupport& s, const FlowNetwork& net, const FlowResult& flow) {
  if (!flow.feasible) throw Error(Errc::Infeasible, "no feasible flow");
  const auto& emb = *s.embedding();
  OrthoRepresentation rep;
  rep.corner_angle.resize(s.vertex_count());
  for (int v = 0; v < s.vertex_count(); ++v)
    rep.corner_angle[v].assign(std::max<size_t>(1, emb.rotation[v].size()), 1);
  rep.dart_bends.assign(2 * s.edge_count(), {});

  std::vector<long long> convex_left(2 * s.edge_count(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    long long f = flow.flow[i];
    if (a.vertex >= 0) {
      rep.corner_angle[a.vertex][a.corner] += static_cast<int>(f);
    } else if (f > 0) {
      // convex bends on a.edge in face a.from
      int d0 = 2 * a.edge;
      int left0 = net.faces.face_of_dart[d0] + net.vertex_nodes;
      int d = left0 == a.from ? d0 : d0 + 1;
      convex_left[d] += f;
    }
  }
  for (int d = 0; d < 2 * s.edge_count(); ++d) {
    for (long long i = 0; i < convex_left[d]; ++i) rep.dart_bends[d].push_back(1);
    for (long long i = 0; i < convex_left[d ^ 1]; ++i) rep.dart_bends[d].push_back(-1);
  }

  // sanity: vertex angles sum to 4, face turns sum to +-4
  for (int v = 0; v < s.vertex_count(); ++v) {
    int sum = 0;
    for (int a : rep.corner_angle[v]) sum += a;
    if (sum != 4) throw Error(Errc::Infeasible, "internal: vertex angle sum violated");
  }
  for (int f = 0; f < net.faces.face_count(); ++f) {
    int sum = 0;
    for (int d : net.faces.face_darts[f]) {
      for (int b : rep.dart_bends[d]) sum += b;
      // corner turn at the head of d
      int v = dart_to(s, d);
      const auto& rot = emb.rotation[v];
      int deg = static_cast<int>(rot.size());
      auto it = std::find(rot.begin(), rot.end(), dart_from(s, d));
      int p = static_cast<int>(it - rot.begin());
      int corner = (p - 1 + deg) % deg;
      sum += 2 - rep.corner_angle[v][corner];
    }
    int expect = f == net.faces.outer_face ? -4 : 4;
    if (sum != expect) throw Error(Errc::Infeasible, "internal: face rotation violated");
  }

  // path bends recomputed from the representation
  PathBendReport report;
  report.flow_cost = flow.cost;
  report.per_path.assign(s.path_count(), 0);
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    int bends = 0;
    for (int e : es) bends += static_cast<int>(rep.dart_bends[2 * e].size());
    for (size_t i = 1; i + 1 < verts.size(); ++i)
      if (!rep.aligned_at(s, verts[i], es[i - 1], es[i])) ++bends;
    report.per_path[p] = bends;
    report.total += bends;
  }
  // forced bends at degree-4 vertices: rotation-consecutive path pairs
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) != 4) continue;
    const auto& rot = emb.rotation[v];
    for (int i = 0; i < 4; ++i) {
      int e1 = s.edge_index(v, rot[i]);
      int e2 = s.edge_index(v, rot[(i + 1) % 4]);
      report.degree4_constant += pair_weight(s, e1, e2);
    }
  }
  if (report.total != report.flow_cost + report.degree4_constant)
    throw Error(Errc::Infeasible, "internal: bend accounting mismatch");
  return {rep, report};
}

// ---------- compaction ----------

namespace {

// Mutable plane map with explicit half-edges, rotations and corner angles.
struct PlaneMap {
  // half h: tail[h] -> head[h]; twin = h ^ 1
  std::vector<int> head, tail;
  std::vector<std::vector<int>> rot;    // per vertex: outgoing halves, ccw
  std::vector<std::vector<int>> angle;  // angle[v][i] between rot[v][i], rot[v][i+1]
  std::vector<int> orig_vertex;         // -1 for dummies
  std::vector<int> orig_edge;           // per half pair: original edge or -1
  std::vector<int> bend_dummy_edge;     // per vertex: original edge if a bend dummy

  int add_vertex(int orig) {
    rot.push_back({});
    angle.push_back({});
    orig_vertex.push_back(orig);
    bend_dummy_edge.push_back(-1);
    return static_cast<int>(rot.size()) - 1;
  }
  int add_half_pair(int a, int b, int oedge) {
    head.push_back(b);
    tail.push_back(a);
    head.push_back(a);
    tail.push_back(b);
    orig_edge.push_back(oedge);
    orig_edge.push_back(oedge);
    return static_cast<int>(head.size()) - 2;
  }
  int vertex_count() const { return static_cast<int>(rot.size()); }
  int half_count() const { return static_cast<int>(head.size()); }

  int rot_pos(int v, int h) const {
    auto it = std::find(rot[v].begin(), rot[v].end(), h);
    return static_cast<int>(it - rot[v].begin());
  }
  // face successor: next dart of the face to the left
  int succ(int h) const {
    int v = head[h];
    int p = rot_pos(v, h ^ 1);
    int deg = static_cast<int>(rot[v].size());
    return rot[v][(p - 1 + deg) % deg];
  }
  // corner angle used when walking h into its head and leaving via succ
  int turn_angle(int h) const {
    int v = head[h];
    int p = rot_pos(v, h ^ 1);
    int deg = static_cast<int>(rot[v].size());
    return angle[v][(p - 1 + deg) % deg];
  }

  void check() const {
    for (int v = 0; v < vertex_count(); ++v) {
      int sum = 0;
      for (int a : angle[v]) sum += a;
      if (sum != 4) throw Error(Errc::Infeasible, "internal: plane map angle sum");
      if (angle[v].size() != std::max<size_t>(1, rot[v].size()))
        throw Error(Errc::Infeasible, "internal: plane map angle arity");
    }
  }
};

struct Faces {
  std::vector<std::vector<int>> walks;
  std::vector<int> face_of;
  std::vector<int> turn_sum;
  int outer = -1;
};

Faces trace(const PlaneMap& pm, int outer_half) {
  Faces fs;
  fs.face_of.assign(pm.half_count(), -1);
  for (int h = 0; h < pm.half_count(); ++h) {
    if (fs.face_of[h] >= 0) continue;
    int id = static_cast<int>(fs.walks.size());
    fs.walks.push_back({});
    int sum = 0;
    int cur = h;
    while (fs.face_of[cur] < 0) {
      fs.face_of[cur] = id;
      fs.walks[id].push_back(cur);
      sum += 2 - pm.turn_angle(cur);
      cur = pm.succ(cur);
    }
    fs.turn_sum.push_back(sum);
  }
  fs.outer = fs.face_of[outer_half];
  for (size_t f = 0; f < fs.walks.size(); ++f) {
    int expect = static_cast<int>(f) == fs.outer ? -4 : 4;
    if (fs.turn_sum[f] != expect)
      throw Error(Errc::Infeasible, "internal: refinement face rotation");
  }
  return fs;
}

// directions: 0 = east, 1 = north, 2 = west, 3 = south
std::vector<int> assign_directions(const PlaneMap& pm) {
  std::vector<int> dir(pm.half_count(), -1);
  std::vector<int> stack{0};
  dir[0] = 0;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    // twin
    if (dir[h ^ 1] < 0) {
      dir[h ^ 1] = (dir[h] + 2) % 4;
      stack.push_back(h ^ 1);
    }
    // successor within the face
    int nh = pm.succ(h);
    int want = (dir[h] + (2 - pm.turn_angle(h)) + 8) % 4;
    if (dir[nh] < 0) {
      dir[nh] = want;
      stack.push_back(nh);
    } else if (dir[nh] != want) {
      throw Error(Errc::Infeasible, "internal: inconsistent directions");
    }
  }
  for (int d : dir)
    if (d < 0) throw Error(Errc::Infeasible, "internal: disconnected plane map");
  return dir;
}

}  // namespace

OrthoDrawing compact(const PathSupport& s, const OrthoRepresentation& rep) {
  const auto& emb = *s.embedding();
  PlaneMap pm;
  for (int v = 0; v < s.vertex_count(); ++v) pm.add_vertex(v);

  // halves for the original edges (before bend expansion), rotations and
  // angles straight from the representation
  std::vector<int> half_of_dart(2 * s.edge_count(), -1);
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [a, b] = s.edge(e);
    int h = pm.add_half_pair(a, b, e);
    half_of_dart[2 * e] = h;
    half_of_dart[2 * e + 1] = h + 1;
  }
  for (int v = 0; v < s.vertex_count(); ++v) {
    for (int w : emb.rotation[v]) pm.rot[v].push_back(half_of_dart[dart_id(s, v, w)]);
    pm.angle[v] = rep.corner_angle[v];
  }

  // expand bends into straight-angle dummies
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& bends = rep.dart_bends[2 * e];
    if (bends.empty()) continue;
    int h = half_of_dart[2 * e];
    int a = pm.tail[h], b = pm.head[h];
    // chain a - z1 - ... - zk - b; the first segment reuses h
    std::vector<int> chain;
    for (size_t i = 0; i < bends.size(); ++i) {
      int z = pm.add_vertex(-1);
      pm.bend_dummy_edge[z] = e;
      chain.push_back(z);
    }
    // rebuild halves: first segment reuses h (a->z1), later segments new
    int cur_from = a;
    std::vector<std::pair<int, int>> seg_halves;  // ordered along a->b
    for (size_t i = 0; i <= bends.size(); ++i) {
      int to = i < bends.size() ? chain[i] : b;
      if (i == 0) {
        pm.head[h] = to;
        pm.tail[h ^ 1] = to;
        seg_halves.emplace_back(h, h ^ 1);
      } else {
        int nh = pm.add_half_pair(cur_from, to, e);
        seg_halves.emplace_back(nh, nh + 1);
      }
      cur_from = to;
    }
    // rotations and angles at the dummies: +1 turn = angle 1 on the left
    for (size_t i = 0; i < chain.size(); ++i) {
      int z = chain[i];
      int in_half = seg_halves[i].first;     // (prev -> z)
      int out_half = seg_halves[i + 1].first;  // (z -> next)
      // rotation ccw at z: order depends on turn
      if (bends[i] == 1) {
        // left turn: ccw rotation [out, in^1], 90-degree corner on the left
        pm.rot[z] = {out_half, in_half ^ 1};
        pm.angle[z] = {1, 3};
      } else {
        // right turn: ccw rotation [in^1, out]
        pm.rot[z] = {in_half ^ 1, out_half};
        pm.angle[z] = {1, 3};
      }
    }
    // b's rotation: replace h entry (b side) with the last segment's reverse
    int pb = pm.rot_pos(b, h ^ 1);
    if (seg_halves.size() > 1) pm.rot[b][pb] = seg_halves.back().second;
  }
  pm.check();

  // getting the corner turns right for the bend chain requires care: verify
  // by tracing the faces now
  int outer_half = half_of_dart[dart_id(s, emb.outer_dart.first, emb.outer_dart.second)];
  Faces faces = trace(pm, outer_half);

  // enclose the outer face in a frame so that the refinement below only ever
  // sees inner faces
  {
    // outer corner with turn <= -1: walk the outer face
    int pick = -1;
    for (int h : faces.walks[faces.outer])
      if (2 - pm.turn_angle(h) <= -1) {
        pick = h;
        break;
      }
    if (pick < 0) throw Error(Errc::Infeasible, "internal: outer face has no reflex corner");
    int u = pm.head[pick];
    // the ray continues the direction of `pick` past its reflex corner
    // frame corners n1..n4 and the attachment dummy z; the ray from u hits z
    int n1 = pm.add_vertex(-1), n2 = pm.add_vertex(-1), n3 = pm.add_vertex(-1),
        n4 = pm.add_vertex(-1), z = pm.add_vertex(-1);
    int h_n1z = pm.add_half_pair(n1, z, -1);
    int h_zn2 = pm.add_half_pair(z, n2, -1);
    int h_n2n3 = pm.add_half_pair(n2, n3, -1);
    int h_n3n4 = pm.add_half_pair(n3, n4, -1);
    int h_n4n1 = pm.add_half_pair(n4, n1, -1);
    int h_uz = pm.add_half_pair(u, z, -1);
    // frame corners, ccw rotations with the 90-degree corner facing the
    // graph: the frame runs n1 (SE) -> z -> n2 (NE) -> n3 (NW) -> n4 (SW)
    // when the escape ray points east
    pm.rot[n1] = {h_n1z, h_n4n1 ^ 1};
    pm.angle[n1] = {1, 3};
    pm.rot[n2] = {h_n2n3, h_zn2 ^ 1};
    pm.angle[n2] = {1, 3};
    pm.rot[n3] = {h_n3n4, h_n2n3 ^ 1};
    pm.angle[n3] = {1, 3};
    pm.rot[n4] = {h_n4n1, h_n3n4 ^ 1};
    pm.angle[n4] = {1, 3};
    // z: like a ray hit on the frame side n1->n2 (headed delta+1)
    pm.rot[z] = {h_zn2, h_uz ^ 1, h_n1z ^ 1};
    pm.angle[z] = {1, 1, 2};
    // u: split the reflex corner: straight continuation of `pick` plus the rest
    int p = pm.rot_pos(u, pick ^ 1);
    int deg = static_cast<int>(pm.rot[u].size());
    int corner = (p - 1 + deg) % deg;  // between rot[corner]=dnext..., rot[corner+1]=pick^1
    int old_angle = pm.angle[u][corner];
    pm.rot[u].insert(pm.rot[u].begin() + corner + 1, h_uz);
    pm.angle[u][corner] = old_angle - 2;  // between dnext-side and uz
    pm.angle[u].insert(pm.angle[u].begin() + corner + 1, 2);  // uz straight to pick^1
    pm.check();
    outer_half = h_n2n3 ^ 1;  // outside of the frame
    faces = trace(pm, outer_half);
  }

  // rectangular refinement: remove every reflex corner of inner faces,
  // inserting a dummy on the first dart where the cumulative turn reaches +2
  bool changed = true;
  int guard = 0;
  while (changed) {
    if (++guard > 10000) throw Error(Errc::Infeasible, "internal: refinement loop");
    changed = false;
    for (size_t f = 0; f < faces.walks.size() && !changed; ++f) {
      if (static_cast<int>(f) == faces.outer) continue;
      const auto& walk = faces.walks[f];
      for (size_t i = 0; i < walk.size() && !changed; ++i) {
        int h = walk[i];
        int turn = 2 - pm.turn_angle(h);
        if (turn >= 0) continue;
        int target_c = turn == -1 ? 2 : 3;
        int u = pm.head[h];
        // walk forward accumulating turns until the ray hits dart g
        int c = 0;
        int g = pm.succ(h);
        while (true) {
          if (c == target_c) break;
          c += 2 - pm.turn_angle(g);
          g = pm.succ(g);
          if (g == h) throw Error(Errc::Infeasible, "internal: refinement ray lost");
        }
        // split g with dummy z, connect u - z
        int sgt = pm.head[g];

        int z = pm.add_vertex(-1);
        // z inherits membership of g's original edge chain
        pm.bend_dummy_edge[z] = -1;
        int orig = pm.orig_edge[g];
        int h_zt = pm.add_half_pair(z, sgt, orig);
        int h_uz = pm.add_half_pair(u, z, -1);
        // g becomes (sgs -> z)
        pm.head[g] = z;
        pm.tail[g ^ 1] = z;
        // fix rotation at sgt: replace g^1 by h_zt^1
        pm.rot[sgt][pm.rot_pos(sgt, g ^ 1)] = h_zt ^ 1;
        // rotation at z: [t, u, s] with angles 1, 1, 2
        pm.rot[z] = {h_zt, h_uz ^ 1, g ^ 1};
        pm.angle[z] = {1, 1, 2};
        // corner at u: same surgery as for the frame
        int p = pm.rot_pos(u, h ^ 1);
        int deg = static_cast<int>(pm.rot[u].size());
        int corner = (p - 1 + deg) % deg;
        int old_angle = pm.angle[u][corner];
        pm.rot[u].insert(pm.rot[u].begin() + corner + 1, h_uz);
        pm.angle[u][corner] = old_angle - 2;
        pm.angle[u].insert(pm.angle[u].begin() + corner + 1, 2);
        changed = true;
      }
    }
    if (changed) {
      pm.check();
      faces = trace(pm, outer_half);
    }
  }

  // longest-path layering per axis
  std::vector<int> dir = assign_directions(pm);
  int nv = pm.vertex_count();
  auto layer = [&](int along_dir) {
    // union endpoints of perpendicular halves, then longest path over the
    // positive-direction halves
    std::vector<int> uf(nv);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int h = 0; h < pm.half_count(); h += 2)
      if (dir[h] % 2 != along_dir % 2) uf[find(pm.head[h])] = find(pm.tail[h]);
    std::vector<std::vector<int>> adj(nv);
    std::vector<int> indeg(nv, 0);
    for (int h = 0; h < pm.half_count(); ++h)
      if (dir[h] == along_dir) {
        int a = find(pm.tail[h]), b = find(pm.head[h]);
        adj[a].push_back(b);
        ++indeg[b];
      }
    std::vector<long long> coord(nv, 0);
    std::deque<int> q;
    int classes = 0;
    for (int x = 0; x < nv; ++x)
      if (find(x) == x) {
        ++classes;
        if (indeg[x] == 0) q.push_back(x);
      }
    int seen = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      ++seen;
      for (int y : adj[x]) {
        coord[y] = std::max(coord[y], coord[x] + 1);
        if (--indeg[y] == 0) q.push_back(y);
      }
    }
    if (seen != classes) throw Error(Errc::Infeasible, "internal: cyclic layering constraints");
    std::vector<long long> out(nv);
    for (int x = 0; x < nv; ++x) out[x] = coord[find(x)];
    return out;
  };
  std::vector<long long> xs = layer(0), ys = layer(1);

  OrthoDrawing drawing;
  drawing.coords.assign(s.vertex_count(), {0, 0});
  for (int v = 0; v < nv; ++v)
    if (pm.orig_vertex[v] >= 0) drawing.coords[pm.orig_vertex[v]] = {xs[v], ys[v]};
  drawing.edge_bends.assign(s.edge_count(), {});
  // bend points along each original edge, ordered from edge(e).first: follow
  // the half chain
  for (int e = 0; e < s.edge_count(); ++e) {
    if (rep.dart_bends[2 * e].empty()) continue;
    // walk from edge(e).first through halves tagged with e
    int at = -1;
    for (int v = 0; v < nv; ++v)
      if (pm.orig_vertex[v] == s.edge(e).first) at = v;
    int prev = -1;
    while (true) {
      int next_half = -1;
      for (int h : pm.rot[at])
        if (pm.orig_edge[h] == e && pm.head[h] != prev) {
          next_half = h;
          break;
        }
      if (next_half < 0) break;
      int to = pm.head[next_half];
      if (pm.orig_vertex[to] == s.edge(e).second) break;
      if (pm.bend_dummy_edge[to] == e) drawing.edge_bends[e].push_back({xs[to], ys[to]});
      prev = at;
      at = to;
    }
  }
  return drawing;
}

}  // namespace bendix
