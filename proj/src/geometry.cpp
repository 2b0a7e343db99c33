#include "bendix/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "bendix/cactus.hpp"

namespace bendix {

namespace {

using Pt = std::pair<double, double>;

Pt operator+(Pt a, Pt b) { return {a.first + b.first, a.second + b.second}; }
Pt operator-(Pt a, Pt b) { return {a.first - b.first, a.second - b.second}; }
Pt operator*(double k, Pt a) { return {k * a.first, k * a.second}; }
double cross(Pt a, Pt b) { return a.first * b.second - a.second * b.first; }
double dot(Pt a, Pt b) { return a.first * b.first + a.second * b.second; }
double norm(Pt a) { return std::sqrt(dot(a, a)); }
Pt rotate(Pt a, double ang) {
  double c = std::cos(ang), s = std::sin(ang);
  return {c * a.first - s * a.second, s * a.first + c * a.second};
}

double point_segment_dist(Pt p, Pt a, Pt b) {
  Pt ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0) return norm(p - a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

// partner edge of e at v under the alignment, or -1
int partner_at(const PathSupport& s, const Alignment& a, int v, int e) {
  for (auto [e1, e2] : a.pairs) {
    int other = -1;
    if (e1 == e) other = e2;
    if (e2 == e) other = e1;
    if (other < 0) continue;
    auto [x, y] = s.edge(other);
    auto [p, q] = s.edge(e);
    int shared = (x == p || x == q) ? x : y;
    if (shared == v) return other;
  }
  return -1;
}

}  // namespace

Drawing realize_tree(const PathSupport& s, const Alignment& alignment) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "tree realization requires a tree");
  check_alignment(s, alignment);
  int n = s.vertex_count();
  Drawing d;
  d.coords.assign(n, {0, 0});
  d.edge_bends.assign(s.edge_count(), {});
  if (n == 1) return d;

  // recursive wedge placement: children of v get rays around it; the child
  // aligned with the parent edge continues straight (same direction vector,
  // so collinearity is exact up to rounding noise far below the tolerance).
  // Straight chains march with a constant step of budget/(2*length) so that
  // segment lengths decay linearly, not exponentially, with depth: deep
  // chains would otherwise sink below the collinearity noise floor.
  struct Task {
    int v;
    int parent;
    Pt dir;        // unit direction parent -> v
    double in_len; // length of the incoming segment
    double budget; // subtree must stay within this radius around v
  };
  // consecutive aligned edges ahead when entering v from its parent
  std::function<int(int, int)> chain_length = [&](int v, int parent) {
    int pe = s.edge_index(v, parent);
    int partner = partner_at(s, alignment, v, pe);
    if (partner < 0) return 0;
    int next = s.edge_other(partner, v);
    return 1 + chain_length(next, v);
  };
  std::function<void(const Task&)> place = [&](const Task& t) {
    std::vector<int> kids;
    for (int w : s.adj(t.v))
      if (w != t.parent) kids.push_back(w);
    if (kids.empty()) return;

    int aligned_kid = -1;
    if (t.parent >= 0) {
      int pe = s.edge_index(t.v, t.parent);
      int partner = partner_at(s, alignment, t.v, pe);
      if (partner >= 0) aligned_kid = s.edge_other(partner, t.v);
    }
    // group remaining children into lines: child-child aligned pairs share a
    // line with opposite rays, singletons get their own line
    std::vector<std::pair<int, int>> lines;  // (child, partner child or -1)
    std::set<int> used;
    if (aligned_kid >= 0) used.insert(aligned_kid);
    for (int w : kids) {
      if (used.count(w)) continue;
      int partner = partner_at(s, alignment, t.v, s.edge_index(t.v, w));
      int pw = partner >= 0 ? s.edge_other(partner, t.v) : -1;
      if (pw == t.parent) pw = -1;  // handled via aligned_kid
      if (pw >= 0 && !used.count(pw)) {
        lines.emplace_back(w, pw);
        used.insert(w);
        used.insert(pw);
      } else if (pw < 0) {
        lines.emplace_back(w, -1);
        used.insert(w);
      }
    }

    // directions
    Pt base = t.parent >= 0 ? t.dir : Pt{1.0, 0.0};
    std::vector<std::pair<int, Pt>> rays;  // (child, unit dir)
    if (aligned_kid >= 0) rays.emplace_back(aligned_kid, base);
    int nl = static_cast<int>(lines.size());
    for (int i = 0; i < nl; ++i) {
      double ang = t.parent >= 0 ? (M_PI * (i + 1)) / (nl + 1) + 0.13
                                 : (M_PI * i) / std::max(1, nl) + 0.39;
      Pt dir = rotate(base, ang);
      rays.emplace_back(lines[i].first, dir);
      if (lines[i].second >= 0) rays.emplace_back(lines[i].second, Pt{-dir.first, -dir.second});
    }

    // chain mode: constant step for the straight run, with the side
    // structures confined to thin slices along it
    int chain = aligned_kid >= 0 ? chain_length(aligned_kid, t.v) + 1 : 0;
    double step = chain > 0 ? t.budget / (2.0 * chain) : 0.0;
    auto dist_of = [&](int w) {
      if (w == aligned_kid) return step;
      return chain > 0 ? step / 3.0 : t.budget / 3.0;
    };
    // safety radius for the non-aligned children: their disks must avoid
    // each other, the incoming segment, the sibling segments and (in chain
    // mode) the forward sausage of the straight run
    double safe = t.budget - (chain > 0 ? step / 3.0 : t.budget / 3.0);
    for (size_t i = 0; i < rays.size(); ++i) {
      if (rays[i].first == aligned_kid) continue;
      Pt pi = d.coords[t.v] + dist_of(rays[i].first) * rays[i].second;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (i == j) continue;
        Pt pj = d.coords[t.v] + dist_of(rays[j].first) * rays[j].second;
        safe = std::min(safe, norm(pi - pj) / 2.0);
        safe = std::min(safe, point_segment_dist(pi, d.coords[t.v], pj));
      }
      if (t.parent >= 0) {
        Pt back = d.coords[t.v] - t.in_len * t.dir;
        safe = std::min(safe, point_segment_dist(pi, back, d.coords[t.v]));
      }
    }
    safe *= 0.8;
    if (chain > 0) safe = std::min(safe, step / 8.0);

    for (auto [w, dir] : rays) {
      double dist = dist_of(w);
      d.coords[w] = d.coords[t.v] + dist * dir;
      double child_budget =
          w == aligned_kid ? (chain == 1 ? 0.45 * step : t.budget - 2.0 * step) : safe;
      place({w, t.v, dir, dist, child_budget});
    }
  };
  place({0, -1, {1.0, 0.0}, 0.0, 1.0});
  return d;
}

Drawing from_ortho(const PathSupport& s, const OrthoDrawing& ortho) {
  Drawing d;
  d.coords.resize(s.vertex_count());
  for (int v = 0; v < s.vertex_count(); ++v)
    d.coords[v] = {static_cast<double>(ortho.coords[v].first),
                   static_cast<double>(ortho.coords[v].second)};
  d.edge_bends.resize(s.edge_count());
  for (int e = 0; e < s.edge_count(); ++e)
    for (auto [x, y] : ortho.edge_bends[e])
      d.edge_bends[e].push_back({static_cast<double>(x), static_cast<double>(y)});
  return d;
}

namespace {

struct Seg {
  Pt a, b;
  int edge;
};

std::vector<Seg> drawing_segments(const PathSupport& s, const Drawing& d) {
  std::vector<Seg> segs;
  for (int e = 0; e < s.edge_count(); ++e) {
    std::vector<Pt> pts{d.coords[s.edge(e).first]};
    if (e < static_cast<int>(d.edge_bends.size()))
      for (Pt p : d.edge_bends[e]) pts.push_back(p);
    pts.push_back(d.coords[s.edge(e).second]);
    for (size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1], e});
  }
  return segs;
}

bool points_close(Pt a, Pt b, double eps) { return norm(a - b) <= eps; }

// improper intersection of two segments (anything beyond a shared endpoint)
bool segments_conflict(const Seg& s1, const Seg& s2, double eps) {
  Pt r = s1.b - s1.a, q = s2.b - s2.a;
  double den = cross(r, q);
  double scale = std::max({norm(r) * norm(q), 1e-30});
  bool share_endpoint = points_close(s1.a, s2.a, eps) || points_close(s1.a, s2.b, eps) ||
                        points_close(s1.b, s2.a, eps) || points_close(s1.b, s2.b, eps);
  if (std::abs(den) <= 1e-12 * scale) {
    // parallel: conflict iff collinear and overlapping beyond a point
    if (std::abs(cross(s2.a - s1.a, r)) > 1e-9 * std::max(norm(s2.a - s1.a) * norm(r), 1e-30))
      return false;
    double len2 = dot(r, r);
    if (len2 == 0) return false;
    double t1 = dot(s2.a - s1.a, r) / len2;
    double t2 = dot(s2.b - s1.a, r) / len2;
    if (t1 > t2) std::swap(t1, t2);
    double lo = std::max(0.0, t1), hi = std::min(1.0, t2);
    double tol = eps / std::sqrt(len2);
    return hi - lo > tol;
  }
  double t = cross(s2.a - s1.a, q) / den;
  double u = cross(s2.a - s1.a, r) / den;
  double tol = 1e-12;
  if (t < -tol || t > 1 + tol || u < -tol || u > 1 + tol) return false;
  if (share_endpoint) {
    bool at_end_1 = t < tol || t > 1 - tol;
    bool at_end_2 = u < tol || u > 1 - tol;
    if (at_end_1 && at_end_2) return false;
  }
  return true;
}

}  // namespace

DrawingReport verify_drawing(const PathSupport& s, const Drawing& d,
                             const std::optional<Alignment>& expected) {
  DrawingReport report;
  double span = 1e-300;
  for (auto [x, y] : d.coords) span = std::max({span, std::abs(x), std::abs(y)});
  double eps = 1e-12 * span;

  for (int v = 0; v < s.vertex_count(); ++v)
    for (int w = v + 1; w < s.vertex_count(); ++w)
      if (points_close(d.coords[v], d.coords[w], eps)) report.degenerate = true;

  // per-path bends: turns at interior vertices and at edge bend points
  std::vector<std::vector<Pt>> polyline(s.edge_count());
  for (int e = 0; e < s.edge_count(); ++e) {
    polyline[e].push_back(d.coords[s.edge(e).first]);
    if (e < static_cast<int>(d.edge_bends.size()))
      for (Pt p : d.edge_bends[e]) polyline[e].push_back(p);
    polyline[e].push_back(d.coords[s.edge(e).second]);
  }
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    std::vector<Pt> line{d.coords[verts[0]]};
    for (size_t i = 0; i < es.size(); ++i) {
      auto pts = polyline[es[i]];
      if (s.edge(es[i]).first != verts[i]) std::reverse(pts.begin(), pts.end());
      line.insert(line.end(), pts.begin() + 1, pts.end());
    }
    int bends = 0;
    for (size_t i = 1; i + 1 < line.size(); ++i) {
      Pt a = line[i] - line[i - 1], b = line[i + 1] - line[i];
      bool straight = std::abs(cross(a, b)) <= kCollinearTol * norm(a) * norm(b) && dot(a, b) > 0;
      if (!straight) ++bends;
    }
    report.per_path_bends.push_back(bends);
    report.total_bends += bends;
    report.max_bends = std::max(report.max_bends, bends);
  }

  auto segs = drawing_segments(s, d);
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (segments_conflict(segs[i], segs[j], eps)) ++report.crossings;

  if (expected) {
    // aligned pairs must be collinear and opposite, unaligned adjacent pairs
    // must not be
    for (int v = 0; v < s.vertex_count(); ++v) {
      const auto& inc = s.incident_edges(v);
      for (size_t i = 0; i < inc.size(); ++i)
        for (size_t j = i + 1; j < inc.size(); ++j) {
          // directions of the first segments leaving v along each edge
          auto first_seg = [&](int e) {
            auto pts = polyline[e];
            if (s.edge(e).first != v) std::reverse(pts.begin(), pts.end());
            return pts[1] - pts[0];
          };
          Pt w1 = first_seg(inc[i]);
          Pt w2 = first_seg(inc[j]);
          bool collinear_opposite =
              std::abs(cross(w1, w2)) <= kCollinearTol * norm(w1) * norm(w2) && dot(w1, w2) < 0;
          if (expected->aligned(inc[i], inc[j]) != collinear_opposite)
            report.alignment_consistent = false;
        }
    }
  }
  return report;
}

// ---------- linear cactus realization ----------

namespace {

struct Block {
  bool is_cycle = false;
  std::vector<int> verts;  // cycle order, or the two bridge endpoints
  std::vector<int> edges;
};

struct CactusState {
  const PathSupport& s;
  Drawing& d;
  std::vector<char> block_drawn;
  std::vector<std::vector<int>> blocks_at;             // vertex -> block ids
  std::vector<Block> blocks;
  std::map<int, Pt> edge_dir_at;                       // key: 2*edge + side, dir away from vertex
  std::map<int, double> edge_len_at;                   // same keys: segment length
  std::vector<std::vector<std::pair<Pt, double>>> placed_dirs;  // per vertex: (dir, reach)
  std::vector<int> block_of_edge_global;               // edge -> block id
  std::vector<std::array<int, 2>> drawn_segments;      // drawn edges, as vertex pairs
  bool planar = false;

  // distance from v to the nearest drawn segment not incident to v; keeps
  // new components inside the local face (for example inside the lens of an
  // aligned cycle whose interior hosts a linked component). A forward
  // direction may be given for blocks that only extend that way (bridges):
  // segments entirely behind it cannot be reached and are ignored, which
  // keeps straight runs marching at a constant step.
  double clearance_at(int v, const Pt* forward = nullptr) const {
    double best = 1e300;
    Pt p = d.coords[v];
    for (auto [a, b] : drawn_segments) {
      if (a == v || b == v) continue;
      Pt pa = d.coords[a], pb = d.coords[b];
      if (forward && dot(pa - p, *forward) <= 0 && dot(pb - p, *forward) <= 0) continue;
      Pt ab = pb - pa;
      double len2 = dot(ab, ab);
      double t = len2 == 0 ? 0.0 : std::clamp(dot(p - pa, ab) / len2, 0.0, 1.0);
      best = std::min(best, norm(p - (pa + t * ab)));
    }
    return best;
  }
};

int dir_key(const PathSupport& s, int e, int v) { return 2 * e + (s.edge(e).first == v ? 0 : 1); }

// alignment partner forced by the paths: the edge paired with e at v, or -1
int path_partner(const PathSupport& s, int v, int e) {
  for (int p : s.paths_on_edge(e)) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    for (size_t i = 1; i + 1 < verts.size(); ++i)
      if (verts[i] == v) {
        if (es[i - 1] == e) return es[i];
        if (es[i] == e) return es[i - 1];
      }
  }
  return -1;
}

void place_components(CactusState& st, int v, double budget);

// draws one block anchored at v; d1 is the unit direction of entry_edge at
// v, d2 of the block's other edge at v (ignored for bridges), `radius`
// bounds the block
void draw_block(CactusState& st, int b, int v, int entry_edge, Pt d1, std::optional<Pt> d2_opt,
                double radius, bool ccw) {
  const PathSupport& s = st.s;
  Block& blk = st.blocks[b];
  st.block_drawn[b] = 1;
  Pt origin = st.d.coords[v];

  std::vector<std::pair<int, double>> deeper;  // (vertex, budget)
  if (!blk.is_cycle) {
    int w = blk.verts[0] == v ? blk.verts[1] : blk.verts[0];
    int e = blk.edges[0];
    st.d.coords[w] = origin + radius * d1;
    st.edge_dir_at[dir_key(s, e, v)] = d1;
    st.edge_dir_at[dir_key(s, e, w)] = Pt{-d1.first, -d1.second};
    st.edge_len_at[dir_key(s, e, v)] = radius;
    st.edge_len_at[dir_key(s, e, w)] = radius;
    st.placed_dirs[v].push_back({d1, radius});
    st.placed_dirs[w].push_back({Pt{-d1.first, -d1.second}, radius});
    st.drawn_segments.push_back({v, w});
    deeper.emplace_back(w, radius / 4.0);
  } else {
    // orient the cycle so it starts at v and leaves along entry_edge (whose
    // direction is d1)
    std::vector<int> cyc = blk.verts;
    auto it = std::find(cyc.begin(), cyc.end(), v);
    std::rotate(cyc.begin(), it, cyc.end());
    if (s.edge_index(v, cyc[1]) != entry_edge) std::reverse(cyc.begin() + 1, cyc.end());
    if (s.edge_index(v, cyc[1]) != entry_edge)
      throw Error(Errc::BadInput, "internal: cycle entry edge not incident");
    int m = static_cast<int>(cyc.size());
    // corners: vertices whose two cycle edges are not on one path
    auto is_corner = [&](int idx) {
      int prev = cyc[(idx + m - 1) % m], cur = cyc[idx], next = cyc[(idx + 1) % m];
      int e1 = s.edge_index(cur, prev), e2 = s.edge_index(cur, next);
      return path_partner(s, cur, e1) != e2;
    };
    std::vector<int> corner_idx;
    for (int i = 0; i < m; ++i)
      if (is_corner(i)) corner_idx.push_back(i);
    if (corner_idx.size() < 3 && !(corner_idx.size() == 2 && !is_corner(0)))
      throw Error(Errc::Infeasible, "cycle cannot be drawn convex with fewer than 3 corners");

    double a1 = std::atan2(d1.second, d1.first);
    double a2;
    if (d2_opt) {
      a2 = std::atan2(d2_opt->second, d2_opt->first);
    } else {
      a2 = a1 + (ccw ? 1 : -1) * M_PI * 0.5;
    }
    // sweep from a1 to a2 in the ccw (or cw) direction
    double sweep = a2 - a1;
    while (ccw && sweep <= 0) sweep += 2 * M_PI;
    while (!ccw && sweep >= 0) sweep -= 2 * M_PI;

    // corner angles along the cycle: points on the circle of `radius` around
    // v from angle a1 to a1+sweep; aligned vertices interpolate on chords
    std::vector<Pt> pos(m);
    pos[0] = origin;
    if (is_corner(0)) {
      // v is a corner: the other corners spread over the arc
      std::vector<int> inner;  // corner indices except v
      for (int i : corner_idx)
        if (i != 0) inner.push_back(i);
      int k = static_cast<int>(inner.size());
      std::vector<Pt> cpos(k);
      for (int t = 0; t < k; ++t) {
        double phi = a1 + sweep * (k == 1 ? 0.5 : static_cast<double>(t) / (k - 1));
        cpos[t] = origin + radius * Pt{std::cos(phi), std::sin(phi)};
      }
      // exact rays for the two ends
      cpos[0] = origin + radius * d1;
      if (d2_opt) cpos[k - 1] = origin + radius * *d2_opt;
      // fill aligned vertices between corners
      std::vector<int> anchors{0};
      anchors.insert(anchors.end(), inner.begin(), inner.end());
      anchors.push_back(m);  // wraps to v
      std::vector<Pt> anchor_pos{origin};
      anchor_pos.insert(anchor_pos.end(), cpos.begin(), cpos.end());
      anchor_pos.push_back(origin);
      for (size_t seg = 0; seg + 1 < anchors.size(); ++seg) {
        int from = anchors[seg], to = anchors[seg + 1];
        Pt pa = anchor_pos[seg], pb = anchor_pos[seg + 1];
        for (int i = from + 1; i < to; ++i) {
          double t = static_cast<double>(i - from) / (to - from);
          pos[i] = pa + t * (pb - pa);
        }
        if (to < m) pos[to] = pb;
      }
    } else {
      // v lies straight on a side (the cycle is aligned at v): draw a flat
      // lens hugging the line through d1 so that structures in other
      // directions are never pierced; the bulge is capped by the angular
      // clearance to everything already drawn at v
      std::vector<int> inner = corner_idx;
      int k = static_cast<int>(inner.size());
      // bulge towards the side free of drawn rays; components forced into
      // the bulge side later are sized into the lens interior by the
      // clearance cap
      Pt n_ccw{-d1.second, d1.first};
      int drawn_ccw = 0, drawn_cw = 0;
      for (const auto& [dd, reach] : st.placed_dirs[v]) {
        double side = dot(dd, n_ccw);
        double along = std::abs(dot(dd, d1));
        if (side > 0.05 * along + 1e-12) ++drawn_ccw;
        if (side < -0.05 * along - 1e-12) ++drawn_cw;
      }
      bool bulge_ccw = ccw;
      if (drawn_ccw == 0 && drawn_cw > 0) bulge_ccw = true;
      if (drawn_cw == 0 && drawn_ccw > 0) bulge_ccw = false;
      double bulge = radius * std::sin(0.35);
      Pt n = bulge_ccw ? n_ccw : Pt{d1.second, -d1.first};
      std::vector<Pt> cpos(k);
      for (int t = 0; t < k; ++t) {
        double theta = M_PI * (t + 1) / (k + 1);
        cpos[t] = origin + (radius * std::cos(theta)) * d1 + (bulge * std::sin(theta)) * n;
      }
      std::vector<int> anchors{0};
      anchors.insert(anchors.end(), inner.begin(), inner.end());
      anchors.push_back(m);
      std::vector<Pt> anchor_pos{origin};
      anchor_pos.insert(anchor_pos.end(), cpos.begin(), cpos.end());
      anchor_pos.push_back(origin);
      // the sides at v leave exactly along d1 and -d1
      cpos[0] = origin + radius * d1;
      anchor_pos[1] = cpos[0];
      cpos[k - 1] = origin + radius * Pt{-d1.first, -d1.second};
      anchor_pos[k] = cpos[k - 1];
      for (size_t seg = 0; seg + 1 < anchors.size(); ++seg) {
        int from = anchors[seg], to = anchors[seg + 1];
        Pt pa = anchor_pos[seg], pb = anchor_pos[seg + 1];
        for (int i = from + 1; i < to; ++i) {
          double t = static_cast<double>(i - from) / (to - from);
          pos[i] = pa + t * (pb - pa);
        }
        if (to < m) pos[to] = pb;
      }
    }

    for (int i = 1; i < m; ++i) st.d.coords[cyc[i]] = pos[i];
    for (int i = 0; i < m; ++i) {
      int cur = cyc[i], next = cyc[(i + 1) % m];
      int e = s.edge_index(cur, next);
      Pt delta = st.d.coords[next] - st.d.coords[cur];
      double len = norm(delta);
      Pt u = (1.0 / len) * delta;
      st.edge_dir_at[dir_key(s, e, cur)] = u;
      st.edge_dir_at[dir_key(s, e, next)] = Pt{-u.first, -u.second};
      st.edge_len_at[dir_key(s, e, cur)] = len;
      st.edge_len_at[dir_key(s, e, next)] = len;
      st.placed_dirs[cur].push_back({u, len});
      st.placed_dirs[next].push_back({Pt{-u.first, -u.second}, len});
      st.drawn_segments.push_back({cur, next});
    }
    for (int i = 1; i < m; ++i) {
      double shortest = 1e300;
      int cur = cyc[i];
      for (int w : {cyc[(i + m - 1) % m], cyc[(i + 1) % m]})
        shortest = std::min(shortest, norm(st.d.coords[cur] - st.d.coords[w]));
      deeper.emplace_back(cur, shortest / 4.0);
    }
  }

  for (auto [w, b2] : deeper) place_components(st, w, b2);
}

void place_components(CactusState& st, int v, double budget) {
  const PathSupport& s = st.s;
  std::vector<int> todo;
  for (int b : st.blocks_at[v])
    if (!st.block_drawn[b]) todo.push_back(b);
  if (todo.empty()) return;

  std::map<int, int> block_of_edge;  // incident edge at v -> undrawn block
  for (int b : todo)
    for (int e : st.blocks[b].edges) {
      auto [x, y] = s.edge(e);
      if (x == v || y == v) block_of_edge[e] = b;
    }
  std::map<int, std::vector<int>> block_edges_at;
  for (auto [e, b] : block_of_edge) block_edges_at[b].push_back(e);
  auto other_edge_of = [&](int b, int e) {
    const auto& es = block_edges_at[b];
    if (es.size() == 1) return -1;
    return es[0] == e ? es[1] : es[0];
  };
  // direction prescribed for an edge at v by an already drawn partner
  auto forced_dir = [&](int e) -> std::optional<Pt> {
    int partner = path_partner(s, v, e);
    if (partner < 0) return std::nullopt;
    auto it = st.edge_dir_at.find(dir_key(s, partner, v));
    if (it == st.edge_dir_at.end()) return std::nullopt;
    return Pt{-it->second.first, -it->second.second};
  };
  // linked undrawn block through a path pair at v
  auto linked_block = [&](int e) -> std::pair<int, int> {
    int partner = path_partner(s, v, e);
    if (partner >= 0 && block_of_edge.count(partner))
      return {block_of_edge[partner], partner};
    return {-1, -1};
  };

  // maximal chains through the linkage graph; start at edges with a drawn
  // partner, then at unlinked edges
  std::set<int> placed;
  std::vector<std::pair<std::vector<int>, int>> chains;  // blocks + entry edge
  std::vector<int> start_edges;
  // aligned cycles first: everything else can still be placed around (or
  // inside) their lens afterwards
  for (auto& [e, b] : block_of_edge)
    if (st.blocks[b].is_cycle && path_partner(s, v, e) == other_edge_of(b, e))
      start_edges.push_back(e);
  for (auto& [e, b] : block_of_edge)
    if (forced_dir(e)) start_edges.push_back(e);
  for (auto& [e, b] : block_of_edge)
    if (!forced_dir(e) && linked_block(e).first < 0) start_edges.push_back(e);
  for (auto& [e, b] : block_of_edge) start_edges.push_back(e);

  for (int start : start_edges) {
    int b = block_of_edge[start];
    if (placed.count(b)) continue;
    std::vector<int> chain;
    int cur_block = b, cur_edge = start;
    while (cur_block >= 0 && !placed.count(cur_block)) {
      placed.insert(cur_block);
      chain.push_back(cur_block);
      int out = other_edge_of(cur_block, cur_edge);
      if (out < 0) break;
      auto [nb, ne] = linked_block(out);
      if (nb < 0 || placed.count(nb)) break;
      cur_block = nb;
      cur_edge = ne;
    }
    chains.push_back({chain, start});
  }

  struct FreeSlot {
    Pt dir;
    double width = 2 * M_PI;  // angular room around dir, both sides
  };
  auto pick_free_dir = [&]() {
    // occupy both rays of every placed direction: a chain may continue
    // through v on the opposite ray later
    std::vector<double> occ;
    for (auto& [dd, reach] : st.placed_dirs[v]) {
      double a = std::atan2(dd.second, dd.first);
      occ.push_back(a);
      occ.push_back(a > 0 ? a - M_PI : a + M_PI);
    }
    std::sort(occ.begin(), occ.end());
    FreeSlot slot;
    double pick = 0.77;
    if (!occ.empty()) {
      double best = -1;
      for (size_t i = 0; i < occ.size(); ++i) {
        double a = occ[i];
        double b2 = i + 1 < occ.size() ? occ[i + 1] : occ[0] + 2 * M_PI;
        if (b2 - a > best) {
          best = b2 - a;
          pick = a + (b2 - a) / 2.0;
        }
      }
      slot.width = best;
    }
    slot.dir = {std::cos(pick), std::sin(pick)};
    return slot;
  };

  // straight bridge runs ahead of an edge: constant-step sizing keeps long
  // merged paths from shrinking exponentially
  std::function<int(int, int)> run_length = [&](int e, int from) {
    int w = s.edge_other(e, from);
    int partner = path_partner(s, w, e);
    if (partner < 0) return 1;
    int pb = st.block_of_edge_global[partner];
    if (st.blocks[pb].is_cycle || st.block_drawn[pb]) return 1;
    return 1 + run_length(partner, w);
  };

  for (size_t q = 0; q < chains.size(); ++q) {
    const auto& [chain, entry_edge] = chains[q];
    int len = static_cast<int>(chain.size());
    // halving per chain keeps wraps containing later chains while the
    // coordinates stay well above the collinearity noise floor
    double rho = budget / std::pow(2.0, static_cast<double>(q));

    Pt dir;
    double room = 0.6;  // free angular room on either side of dir
    bool lens = st.blocks[chain[0]].is_cycle &&
                path_partner(s, v, entry_edge) == other_edge_of(chain[0], entry_edge);
    if (auto f = forced_dir(entry_edge)) {
      dir = *f;
    } else if (lens) {
      // the lens line must keep every drawn ray strictly on one side so the
      // bulge can face away from all of them
      std::vector<double> occ;
      for (auto& [dd, reach] : st.placed_dirs[v]) occ.push_back(std::atan2(dd.second, dd.first));
      std::sort(occ.begin(), occ.end());
      double pick = 0.77;
      double best_margin = -1;
      if (occ.empty()) {
        dir = {std::cos(pick), std::sin(pick)};
      } else {
        for (size_t i = 0; i < occ.size(); ++i) {
          double a = occ[i];
          double b2 = i + 1 < occ.size() ? occ[i + 1] : occ[0] + 2 * M_PI;
          for (double frac : {0.25, 0.5, 0.75}) {
            double cand = a + (b2 - a) * frac;
            // margin: smallest angular distance of a drawn ray to the line
            double margin = M_PI;
            bool pos = false, neg = false;
            for (double o : occ) {
              double rel = o - cand;
              while (rel <= -M_PI) rel += 2 * M_PI;
              while (rel > M_PI) rel -= 2 * M_PI;
              double off_line = std::min(std::abs(rel), M_PI - std::abs(rel));
              if (off_line > 1e-9) (rel >= 0 && rel < M_PI ? pos : neg) = true;
              margin = std::min(margin, off_line);
            }
            bool one_sided = !(pos && neg);
            double score = (one_sided ? M_PI : 0) + margin;
            if (score > best_margin) {
              best_margin = score;
              pick = cand;
            }
          }
        }
        dir = {std::cos(pick), std::sin(pick)};
      }
    } else {
      FreeSlot slot = pick_free_dir();
      dir = slot.dir;
      room = slot.width / 2.0;
    }

    double sigma = std::min(0.3, room * 0.5) / (len + 1);
    int cur_edge = entry_edge;
    for (int j = 0; j < len; ++j) {
      int b = chain[j];
      double r = rho * std::pow(2.0, j + 1 - len);
      if (!st.blocks[b].is_cycle) {
        int partner = path_partner(s, v, cur_edge);
        bool continuing = partner >= 0 && st.edge_len_at.count(dir_key(s, partner, v)) &&
                          !st.blocks[st.block_of_edge_global[partner]].is_cycle;
        if (continuing) {
          r = st.edge_len_at[dir_key(s, partner, v)];  // march at the incoming step
        } else {
          r /= std::max(1, run_length(cur_edge, v));   // head of a run: share the allowance
        }
      }
      int out_edge = other_edge_of(b, cur_edge);
      bool ccw = (j % 2) == 0;
      std::optional<Pt> d2;
      if (st.blocks[b].is_cycle) {
        if (out_edge >= 0) {
          if (auto f = forced_dir(out_edge)) {
            d2 = *f;  // drawn partner or chain closure
          } else if (path_partner(s, v, cur_edge) == out_edge) {
            d2 = Pt{-dir.first, -dir.second};  // cycle aligned at v
          } else {
            // the whole polygon cone must stay inside the free room; linked
            // blocks keep a thin cone so the chain zigzags in slivers around
            // the shared line instead of sweeping across drawn directions
            double ang = std::atan2(dir.second, dir.first);
            bool linked_onward = linked_block(out_edge).first >= 0 && j + 1 < len;
            double turn = (ccw ? 1 : -1) *
                          (linked_onward ? sigma * (j + 1) : std::min(1.2, room * 0.6));
            d2 = Pt{std::cos(ang + turn), std::sin(ang + turn)};
          }
        }
      }
      r = std::min(r, (st.blocks[b].is_cycle ? st.clearance_at(v)
                                              : st.clearance_at(v, &dir)) /
                          4.0);
      draw_block(st, b, v, cur_edge, dir, d2, r, ccw);
      if (out_edge >= 0 && j + 1 < len) {
        Pt out_dir = st.edge_dir_at[dir_key(s, out_edge, v)];
        dir = Pt{-out_dir.first, -out_dir.second};
        cur_edge = linked_block(out_edge).second;
      }
    }
  }
}

}  // namespace

Drawing realize_linear_cactus(const PathSupport& s, bool planar) {
  GraphClass cls = validate(s);
  if (cls.kind != GraphClass::Tree && cls.kind != GraphClass::Cactus)
    throw Error(Errc::NotACactus, "cactus realization requires a cactus support");
  if (!cls.linear) throw Error(Errc::NotLinear, "cactus realization requires a linear support");
  if (planar && !linear_planar_zero(s).ok)
    throw Error(Errc::Infeasible, "planar conditions violated at some vertex");

  Drawing d;
  d.coords.assign(s.vertex_count(), {0, 0});
  d.edge_bends.assign(s.edge_count(), {});
  if (s.vertex_count() == 1) return d;

  CactusState st{s, d, {}, {}, {}, {}, {}, {}, {}, {}, planar};
  // blocks: cycles plus bridge edges
  auto cycles = cactus_cycles(s);
  std::vector<char> on_cycle(s.edge_count(), 0);
  for (const auto& cyc : cycles) {
    Block b;
    b.is_cycle = true;
    b.verts = cyc;
    int m = static_cast<int>(cyc.size());
    for (int i = 0; i < m; ++i) {
      int e = s.edge_index(cyc[i], cyc[(i + 1) % m]);
      b.edges.push_back(e);
      on_cycle[e] = 1;
    }
    st.blocks.push_back(b);
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    if (on_cycle[e]) continue;
    Block b;
    b.is_cycle = false;
    b.verts = {s.edge(e).first, s.edge(e).second};
    b.edges = {e};
    st.blocks.push_back(b);
  }
  st.block_drawn.assign(st.blocks.size(), 0);
  st.blocks_at.assign(s.vertex_count(), {});
  for (size_t b = 0; b < st.blocks.size(); ++b)
    for (int v : st.blocks[b].verts) st.blocks_at[v].push_back(static_cast<int>(b));
  st.placed_dirs.assign(s.vertex_count(), {});
  st.block_of_edge_global.assign(s.edge_count(), -1);
  for (size_t b = 0; b < st.blocks.size(); ++b)
    for (int e : st.blocks[b].edges) st.block_of_edge_global[e] = static_cast<int>(b);

  place_components(st, 0, 1.0);
  // any remaining components hang off vertices drawn later; sweep until done
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t b = 0; b < st.blocks.size(); ++b) {
      if (st.block_drawn[b]) continue;
      for (int v : st.blocks[b].verts) {
        if (!st.placed_dirs[v].empty()) {
          double shortest = 1e300;
          for (auto& [dir, reach] : st.placed_dirs[v]) shortest = std::min(shortest, reach);
          place_components(st, v, shortest / 4.0);
          progress = true;
          break;
        }
      }
    }
  }
  return d;
}

}  // namespace bendix
