#include "bendix/cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bendix {

namespace {

// Edges of each path at vertex v when v is interior; -1 otherwise.
std::pair<int, int> interior_pair(const PathSupport& s, int p, int v) {
  const auto& verts = s.path(p).verts;
  const auto& es = s.path_edges(p);
  for (size_t i = 1; i + 1 < verts.size(); ++i)
    if (verts[i] == v) return {es[i - 1], es[i]};
  return {-1, -1};
}

std::vector<int> edge_cycle_labels(const PathSupport& s) {
  std::vector<int> ec(s.edge_count(), -1);
  auto cycles = cactus_cycles(s);
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    const auto& cyc = cycles[c];
    int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) ec[s.edge_index(cyc[i], cyc[(i + 1) % len])] = c;
  }
  return ec;
}

}  // namespace

std::optional<SplitWitness> detect_split(const PathSupport& s) {
  for (int v = 0; v < s.vertex_count(); ++v) {
    // half-edge lists: paths traversing e and not ending at v
    std::vector<int> local_paths;  // paths interior at v
    std::map<int, std::pair<int, int>> pair_of;
    for (int p = 0; p < s.path_count(); ++p) {
      auto pr = interior_pair(s, p, v);
      if (pr.first >= 0) {
        local_paths.push_back(p);
        pair_of[p] = pr;
      }
    }
    if (local_paths.empty()) continue;
    std::map<int, std::vector<int>> half_edge;  // edge -> traversing paths (sorted edge order)
    for (int p : local_paths) {
      half_edge[pair_of[p].first].push_back(p);
      half_edge[pair_of[p].second].push_back(p);
    }
    // union-find over local paths, with per-set access counter and origins
    std::map<int, int> parent;
    std::map<int, int> counter;              // root -> accesses
    std::map<int, int> first_origin;         // root -> half-edge of first access
    std::map<int, int> second_rep;           // root -> representative path of second access
    for (int p : local_paths) {
      parent[p] = p;
      counter[p] = 0;
    }
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto other_edge = [&](int p, int e) {
      return pair_of[p].first == e ? pair_of[p].second : pair_of[p].first;
    };
    for (const auto& [e, plist] : half_edge) {
      int p1 = plist.front();
      int root = find(p1);
      int c = counter[root];
      if (c == 0) {
        counter[root] = 1;
        first_origin[root] = e;
        for (size_t i = 1; i < plist.size(); ++i) {
          int p = plist[i];
          int r2 = find(p);
          if (r2 == root) continue;
          if (counter[r2] != 0) {
            // p appeared at a half-edge where p1 did not
            SplitWitness w;
            w.vertex = v;
            w.shared_edge = e;
            w.edge1 = first_origin[r2];
            w.edge2 = other_edge(p1, e);
            w.path1 = p;
            w.path2 = p1;
            return w;
          }
          parent[r2] = root;
        }
      } else if (c == 1) {
        counter[root] = 2;
        second_rep[root] = p1;
        for (size_t i = 1; i < plist.size(); ++i) {
          int p = plist[i];
          if (find(p) != root) {
            SplitWitness w;
            w.vertex = v;
            w.shared_edge = e;
            w.edge1 = other_edge(p, e);
            w.edge2 = first_origin[root];
            w.path1 = p;
            w.path2 = p1;
            return w;
          }
        }
      } else {
        // p1 lies in a set already matched twice
        SplitWitness w;
        w.vertex = v;
        w.shared_edge = first_origin[root];
        w.edge1 = e;
        w.edge2 = second_rep.count(root) ? other_edge(second_rep[root], first_origin[root]) : -1;
        w.path1 = p1;
        w.path2 = second_rep.count(root) ? second_rep[root] : -1;
        return w;
      }
    }
  }
  return std::nullopt;
}

MergedPathSet merge_shared(const PathSupport& s) {
  if (auto w = detect_split(s))
    throw Error(Errc::SplitPresent,
                "paths " + s.path(w->path1).id + " and " + s.path(w->path2).id +
                    " split at '" + s.vertex_name(w->vertex) + "'");
  MergedPathSet out;
  int np = s.path_count();
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& list = s.paths_on_edge(e);
    for (size_t i = 1; i < list.size(); ++i) {
      int a = find(list[0]), b = find(list[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  out.class_of.assign(np, -1);
  std::map<int, int> root_to_class;
  for (int p = 0; p < np; ++p) {
    int r = find(p);
    auto [it, fresh] = root_to_class.try_emplace(r, static_cast<int>(out.classes.size()));
    if (fresh) out.classes.push_back({});
    out.class_of[p] = it->second;
    out.classes[it->second].push_back(p);
  }
  out.edge_label.assign(s.edge_count(), -1);
  for (int e = 0; e < s.edge_count(); ++e)
    out.edge_label[e] = out.class_of[s.paths_on_edge(e).front()];

  // order each class's edge set into a simple path if possible
  out.merged_verts.assign(out.classes.size(), {});
  for (size_t c = 0; c < out.classes.size(); ++c) {
    std::set<int> edges;
    for (int p : out.classes[c])
      for (int e : s.path_edges(p)) edges.insert(e);
    std::map<int, std::vector<int>> deg;
    for (int e : edges) {
      deg[s.edge(e).first].push_back(s.edge(e).second);
      deg[s.edge(e).second].push_back(s.edge(e).first);
    }
    int start = -1;
    bool bad = false;
    for (auto& [v, nb] : deg) {
      std::sort(nb.begin(), nb.end());
      if (nb.size() > 2) bad = true;
      if (nb.size() == 1 && start < 0) start = v;
    }
    if (bad || start < 0) {  // branching vertex, or all degree 2 = closed cycle
      out.all_paths = false;
      continue;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int w : deg[cur])
        if (w != prev) {
          next = w;
          break;
        }
      if (next < 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (order.size() != deg.size()) {
      out.all_paths = false;
      continue;
    }
    out.merged_verts[c] = std::move(order);
  }
  return out;
}

PathSupport merged_support(const PathSupport& s, const MergedPathSet& merged) {
  if (!merged.all_paths)
    throw Error(Errc::BadInput, "a merged class closes a cycle; no path support exists");
  std::vector<std::string> names;
  for (int v = 0; v < s.vertex_count(); ++v) names.push_back(s.vertex_name(v));
  std::vector<Path> paths;
  for (size_t c = 0; c < merged.classes.size(); ++c) {
    Path p;
    p.id = "m" + std::to_string(c);
    p.verts = merged.merged_verts[c];
    paths.push_back(std::move(p));
  }
  return PathSupport::from_indexed(std::move(names), s.edges(), std::move(paths),
                                   s.embedding());
}

bool two_label_cycle_check(const PathSupport& s, const MergedPathSet& merged) {
  for (const auto& cyc : cactus_cycles(s)) {
    std::set<int> labels;
    int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i)
      labels.insert(merged.edge_label[s.edge_index(cyc[i], cyc[(i + 1) % len])]);
    if (labels.size() == 2) return false;
  }
  return true;
}

PlanarZeroReport linear_planar_zero(const PathSupport& s) {
  if (!is_cactus(s)) throw Error(Errc::NotACactus, "planar zero test requires a cactus");
  if (!is_linear(s)) throw Error(Errc::NotLinear, "planar zero test requires a linear support");
  PlanarZeroReport report;
  std::vector<int> ec = edge_cycle_labels(s);
  int n = s.vertex_count();
  std::vector<int> aligned_at(n, 0);
  std::vector<std::map<int, std::vector<int>>> h_adj(n);
  std::vector<char> has_cross(n, 0);
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    for (size_t i = 1; i + 1 < verts.size(); ++i) {
      int v = verts[i];
      int c1 = ec[es[i - 1]], c2 = ec[es[i]];
      if (c1 >= 0 && c1 == c2) ++aligned_at[v];
      if (c1 >= 0 && c2 >= 0 && c1 != c2) {
        h_adj[v][c1].push_back(c2);
        h_adj[v][c2].push_back(c1);
        has_cross[v] = 1;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (aligned_at[v] > 1) {
      report.ok = false;
      report.issues.emplace_back(v, "two cycles aligned at the vertex");
      continue;
    }
    if (aligned_at[v] == 1 && has_cross[v]) {
      // bipartiteness of the constraint graph at v
      std::map<int, int> color;
      bool odd = false;
      for (const auto& [c, _] : h_adj[v]) {
        if (color.count(c)) continue;
        color[c] = 0;
        std::vector<int> stack{c};
        while (!stack.empty() && !odd) {
          int x = stack.back();
          stack.pop_back();
          for (int y : h_adj[v][x]) {
            if (!color.count(y)) {
              color[y] = color[x] ^ 1;
              stack.push_back(y);
            } else if (color[y] == color[x]) {
              odd = true;
              break;
            }
          }
        }
        if (odd) break;
      }
      if (odd) {
        report.ok = false;
        report.issues.emplace_back(v, "aligned cycle with an odd constraint cycle");
      }
    }
  }
  return report;
}

bool zero_curve_complexity(const PathSupport& s, bool planar) {
  GraphClass cls = validate(s);
  if (cls.kind != GraphClass::Tree && cls.kind != GraphClass::Cactus)
    throw Error(Errc::NotACactus, "zero test requires a tree or cactus support");
  if (detect_split(s)) return false;
  MergedPathSet merged = merge_shared(s);
  if (!merged.all_paths) return false;
  if (!two_label_cycle_check(s, merged)) return false;
  if (!planar) return true;
  return linear_planar_zero(merged_support(s, merged)).ok;
}

SplitPlan min_split_zero_drawing_plan(const PathSupport& s) {
  if (!is_cactus(s)) throw Error(Errc::NotACactus, "split planning requires a cactus");
  if (!is_linear(s)) throw Error(Errc::NotLinear, "split planning requires a linear support");
  std::vector<int> ec = edge_cycle_labels(s);
  int n = s.vertex_count();
  SplitPlan plan;
  plan.per_path_bends.assign(s.path_count(), 0);

  for (int v = 0; v < n; ++v) {
    std::vector<int> closing;  // paths whose two edges at v lie in one cycle
    std::map<int, std::vector<int>> h_adj;
    for (int p = 0; p < s.path_count(); ++p) {
      auto [e1, e2] = interior_pair(s, p, v);
      if (e1 < 0) continue;
      int c1 = ec[e1], c2 = ec[e2];
      if (c1 >= 0 && c1 == c2) closing.push_back(p);
      if (c1 >= 0 && c2 >= 0 && c1 != c2) {
        h_adj[c1].push_back(c2);
        h_adj[c2].push_back(c1);
      }
    }
    if (closing.empty()) continue;
    bool odd = false;
    {
      std::map<int, int> color;
      for (const auto& [c, _] : h_adj) {
        if (color.count(c)) continue;
        color[c] = 0;
        std::vector<int> stack{c};
        while (!stack.empty() && !odd) {
          int x = stack.back();
          stack.pop_back();
          for (int y : h_adj[x]) {
            if (!color.count(y)) {
              color[y] = color[x] ^ 1;
              stack.push_back(y);
            } else if (color[y] == color[x]) {
              odd = true;
              break;
            }
          }
        }
        if (odd) break;
      }
    }
    std::vector<int> to_split = closing;
    if (!odd) {
      // spare one path; prefer a path already split elsewhere
      int spare = to_split[0];
      for (int p : to_split)
        if (plan.per_path_bends[p] > plan.per_path_bends[spare]) spare = p;
      to_split.erase(std::find(to_split.begin(), to_split.end(), spare));
    }
    for (int p : to_split) {
      plan.splits.emplace_back(p, v);
      ++plan.per_path_bends[p];
    }
  }

  // fragments
  for (int p = 0; p < s.path_count(); ++p) {
    std::set<int> cut;
    for (auto [pp, v] : plan.splits)
      if (pp == p) cut.insert(v);
    const auto& verts = s.path(p).verts;
    std::vector<int> frag{verts[0]};
    int k = 0;
    for (size_t i = 1; i < verts.size(); ++i) {
      frag.push_back(verts[i]);
      bool is_cut = i + 1 < verts.size() && cut.count(verts[i]);
      if (is_cut || i + 1 == verts.size()) {
        Path f;
        f.id = s.path(p).id + "." + std::to_string(k++);
        f.verts = frag;
        plan.split_paths.push_back(std::move(f));
        plan.fragment_of.push_back(p);
        frag = {verts[i]};
      }
    }
  }
  return plan;
}

PathSupport split_support(const PathSupport& s, const SplitPlan& plan) {
  std::vector<std::string> names;
  for (int v = 0; v < s.vertex_count(); ++v) names.push_back(s.vertex_name(v));
  return PathSupport::from_indexed(std::move(names), s.edges(), plan.split_paths, s.embedding());
}

}  // namespace bendix
