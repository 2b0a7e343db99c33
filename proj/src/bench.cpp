#include "bendix/bench.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace bendix {

namespace {

int uniform_in(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

struct Builder {
  std::vector<std::string> verts;
  std::map<std::string, int> index;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> edge_set;
  std::vector<std::pair<std::string, std::vector<std::string>>> paths;

  int vertex(const std::string& v) {
    auto [it, fresh] = index.try_emplace(v, static_cast<int>(verts.size()));
    if (fresh) verts.push_back(v);
    return it->second;
  }
  void edge(const std::string& a, const std::string& b) {
    vertex(a);
    vertex(b);
    auto key = std::minmax(a, b);
    if (edge_set.insert({key.first, key.second}).second) edges.emplace_back(a, b);
  }
  void path(const std::string& id, const std::vector<std::string>& vs) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) edge(vs[i], vs[i + 1]);
    paths.emplace_back(id, vs);
  }
  int cover_leftovers(const std::string& prefix) {
    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& [id, vs] : paths)
      for (size_t i = 0; i + 1 < vs.size(); ++i) {
        auto key = std::minmax(vs[i], vs[i + 1]);
        covered.insert({key.first, key.second});
      }
    int added = 0;
    for (const auto& [a, b] : edges) {
      auto key = std::minmax(a, b);
      if (!covered.count({key.first, key.second}))
        paths.emplace_back(prefix + std::to_string(added++), std::vector<std::string>{a, b});
    }
    return added;
  }
  PathSupport build(std::optional<PlaneEmbedding> emb = std::nullopt) const {
    return PathSupport::from_parts(verts, edges, paths, std::move(emb));
  }
};

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula f;
  std::istringstream in(text);
  std::string line;
  std::vector<int> lits;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ls(line);
      std::string p, fmt;
      int m;
      ls >> p >> fmt >> f.variables >> m;
      continue;
    }
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (lits.size() != 3) throw Error(Errc::BadInput, "clauses must have exactly 3 literals");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
        lits.clear();
      } else {
        if (std::abs(lit) > f.variables) f.variables = std::abs(lit);
        lits.push_back(lit);
      }
    }
  }
  if (!lits.empty()) {
    if (lits.size() != 3) throw Error(Errc::BadInput, "clauses must have exactly 3 literals");
    f.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  return f;
}

PathSupport gen_complete_binary_tree(int height) {
  if (height < 1) throw Error(Errc::BadInput, "height must be >= 1");
  Builder b;
  auto name = [](int t) { return "n" + std::to_string(t); };
  int total = (1 << (height + 1)) - 1;
  for (int t = 1; t < total; ++t) b.edge(name((t - 1) / 2), name(t));
  int first_leaf = (1 << height) - 1;
  int k = 0;
  for (int leaf = first_leaf; leaf < total; ++leaf) {
    std::vector<std::string> vs;
    for (int t = leaf;; t = (t - 1) / 2) {
      vs.push_back(name(t));
      if (t == 0) break;
    }
    b.path("p" + std::to_string(k++), vs);
  }
  return b.build();
}

PathSupport gen_comb_cactus(int n) {
  if (n < 3) throw Error(Errc::BadInput, "comb cactus needs n >= 3");
  Builder b;
  auto name = [](int i) { return "v" + std::to_string(i); };
  std::vector<std::string> pverts, qverts;
  for (int i = 0; i < n; ++i) pverts.push_back(name(i));
  for (int i = 0; i <= 2 * ((n - 1) / 2); i += 2) qverts.push_back(name(i));
  b.path("P", pverts);
  b.path("Q", qverts);
  return b.build();
}

PathSupport gen_caterpillar(int spine, int legs, int num_paths, uint64_t seed) {
  if (spine < 1 || legs < 0) throw Error(Errc::BadInput, "bad caterpillar parameters");
  std::mt19937_64 rng(seed);
  Builder b;
  auto sname = [](int i) { return "s" + std::to_string(i); };
  std::vector<std::pair<std::string, int>> leaves;  // (name, spine index)
  for (int i = 0; i + 1 < spine; ++i) b.edge(sname(i), sname(i + 1));
  if (spine == 1) b.vertex(sname(0));
  for (int i = 0; i < spine; ++i)
    for (int j = 0; j < legs; ++j) {
      std::string leaf = "l" + std::to_string(i) + "_" + std::to_string(j);
      b.edge(sname(i), leaf);
      leaves.emplace_back(leaf, i);
    }
  for (int k = 0; k < num_paths; ++k) {
    std::vector<std::string> vs;
    if (!leaves.empty() && rng() % 3 != 0) {
      auto [la, ia] = leaves[uniform_in(rng, 0, static_cast<int>(leaves.size()) - 1)];
      auto [lc, ic] = leaves[uniform_in(rng, 0, static_cast<int>(leaves.size()) - 1)];
      if (ia > ic) {
        std::swap(la, lc);
        std::swap(ia, ic);
      }
      if (la == lc) {
        vs = {la, sname(ia)};
      } else {
        vs.push_back(la);
        for (int i = ia; i <= ic; ++i) vs.push_back(sname(i));
        vs.push_back(lc);
      }
    } else {
      int a = uniform_in(rng, 0, spine - 1);
      int c = uniform_in(rng, 0, spine - 1);
      if (a == c) {
        if (spine == 1) {
          if (leaves.empty()) continue;
          vs = {leaves[0].first, sname(0)};
          b.path("p" + std::to_string(k), vs);
          continue;
        }
        c = a + 1 < spine ? a + 1 : a - 1;
      }
      if (a > c) std::swap(a, c);
      for (int i = a; i <= c; ++i) vs.push_back(sname(i));
    }
    b.path("p" + std::to_string(k), vs);
  }
  b.cover_leftovers("cov");
  return b.build();
}

// ---- diameter-6 3-SAT reduction ----

Sat3Reduction gen_3sat_reduction(const CnfFormula& f) {
  Sat3Reduction red;
  red.formula = f;
  Builder b;
  auto var_center = [](int i) { return "x" + std::to_string(i); };
  auto lit_leaf = [](int lit) {
    return (lit > 0 ? std::string("v") : std::string("nv")) + std::to_string(std::abs(lit));
  };
  for (int i = 1; i <= f.variables; ++i) {
    b.edge("x", var_center(i));
    b.edge(var_center(i), "v" + std::to_string(i));
    b.edge(var_center(i), "nv" + std::to_string(i));
  }
  int m = static_cast<int>(f.clauses.size());
  red.copies.resize(m);
  for (int j = 0; j < m; ++j) {
    auto [l1, l2, l3] = f.clauses[j];
    for (int k = 0; k < 4; ++k) {
      Sat3Reduction::CopyInfo info;
      std::string base = "c" + std::to_string(j + 1) + "_" + std::to_string(k);
      info.root = base;
      info.child_a = base + "a";
      info.child_b = base + "b";
      info.leaves = {base + "a1", base + "a2", base + "b1", base + "b2"};
      info.literal = {l1, l2, l1, l3};  // the first literal appears once per subtree
      b.edge("x", info.root);
      b.edge(info.root, info.child_a);
      b.edge(info.root, info.child_b);
      b.edge(info.child_a, info.leaves[0]);
      b.edge(info.child_a, info.leaves[1]);
      b.edge(info.child_b, info.leaves[2]);
      b.edge(info.child_b, info.leaves[3]);
      for (int t = 0; t < 4; ++t) {
        int lit = info.literal[t];
        std::vector<std::string> vs{info.leaves[t], t < 2 ? info.child_a : info.child_b,
                                    info.root,      "x",
                                    var_center(std::abs(lit)), lit_leaf(lit)};
        b.path("q" + std::to_string(j + 1) + "_" + std::to_string(k) + "_" + std::to_string(t),
               vs);
        ++red.reduction_paths;
      }
      red.copies[j][k] = std::move(info);
    }
  }
  red.padding_paths = b.cover_leftovers("cov");
  red.support = b.build();
  return red;
}

Alignment sat3_alignment(const Sat3Reduction& red, const std::vector<bool>& assignment) {
  const PathSupport& s = red.support;
  Alignment a;
  auto e = [&](const std::string& u, const std::string& v) {
    int idx = s.edge_index(s.vertex_index(u), s.vertex_index(v));
    if (idx < 0) throw Error(Errc::BadInput, "missing edge in reduction");
    return idx;
  };
  const CnfFormula& f = red.formula;
  for (int i = 1; i <= f.variables; ++i) {
    std::string leaf = assignment[i - 1] ? "v" + std::to_string(i) : "nv" + std::to_string(i);
    a.add(e("x", "x" + std::to_string(i)), e("x" + std::to_string(i), leaf));
  }
  auto value = [&](int lit) { return lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1]; };
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    auto [l1, l2, l3] = f.clauses[j];
    if (!value(l1) && !value(l2) && !value(l3))
      throw Error(Errc::BadInput, "assignment does not satisfy the formula");
    int tau = value(l1) ? l1 : value(l2) ? l2 : l3;
    for (int k = 0; k < 4; ++k) {
      const auto& info = red.copies[j][k];
      if (tau == l1 || tau == l3) {
        // deep two-bend subpath ends in subtree B (B1 holds l1, B2 holds l3)
        a.add(e(info.root, "x"), e(info.root, info.child_a));
        a.add(e(info.child_a, info.root), e(info.child_a, info.leaves[0]));
        a.add(e(info.child_b, info.root),
              e(info.child_b, tau == l1 ? info.leaves[3] : info.leaves[2]));
      } else {
        // tau == l2, held only by A2
        a.add(e(info.root, "x"), e(info.root, info.child_b));
        a.add(e(info.child_b, info.root), e(info.child_b, info.leaves[2]));
        a.add(e(info.child_a, info.root), e(info.child_a, info.leaves[0]));
      }
    }
  }
  a.canonicalize();
  check_alignment(s, a);
  return a;
}

// ---- NAE-3-SAT reduction ----

NaeReduction gen_nae_reduction(const CnfFormula& f) {
  NaeReduction red;
  Builder b;
  int n = f.variables;
  int m = static_cast<int>(f.clauses.size());
  auto lit_leaf = [](int lit) {
    return (lit > 0 ? std::string("v") : std::string("nv")) + std::to_string(std::abs(lit));
  };
  for (int i = 1; i <= n; ++i) {
    std::string xc = "x" + std::to_string(i);
    b.edge("x", xc);
    b.edge(xc, "v" + std::to_string(i));
    b.edge(xc, "nv" + std::to_string(i));
    b.edge("x", "t_x" + std::to_string(i));
    b.path("z_x" + std::to_string(i), {xc, "x", "t_x" + std::to_string(i)});
  }
  for (int j = 1; j <= m; ++j) {
    auto [l1, l2, l3] = f.clauses[j - 1];
    std::array<int, 3> lits{l1, l2, l3};
    std::string cp = "cp" + std::to_string(j);
    std::string ncp = "ncp" + std::to_string(j);
    b.edge("x", cp);
    b.edge("x", ncp);
    b.edge("x", "t_" + cp);
    b.edge("x", "t_" + ncp);
    b.path("z_" + cp, {cp, "x", "t_" + cp});
    b.path("z_" + ncp, {ncp, "x", "t_" + ncp});
    for (int t = 0; t < 3; ++t) {
      std::string pos_leaf = cp + "_" + std::to_string(t + 1);
      std::string neg_leaf = ncp + "_" + std::to_string(t + 1);
      b.edge(cp, pos_leaf);
      b.edge(ncp, neg_leaf);
      int lit = lits[t];
      b.path("o_p" + std::to_string(j) + "_" + std::to_string(t + 1),
             {pos_leaf, cp, "x", "x" + std::to_string(std::abs(lit)), lit_leaf(lit)});
      b.path("o_n" + std::to_string(j) + "_" + std::to_string(t + 1),
             {neg_leaf, ncp, "x", "x" + std::to_string(std::abs(lit)), lit_leaf(-lit)});
    }
  }
  red.padding_paths = b.cover_leftovers("cov");
  red.support = b.build();
  red.base_n0 = n + 2 * m;
  red.base_n1 = 2 * m;
  red.n0 = red.base_n0 + red.padding_paths;  // covering paths are always straight
  red.n1 = red.base_n1;
  return red;
}

// ---- degree-3 3-SAT reduction ----

namespace {

int ceil_log2(int x) {
  int h = 0;
  while ((1 << h) < x) ++h;
  return h;
}

// Collects a routing tree whose leaves all sit at the same depth (>= 1);
// inner vertices may have a single child when the leaf count is not a power
// of two. Route vertices are virtual: they are replaced by alignment
// gadgets, so no graph edges are created here.
void attach_uniform(const std::string& root, const std::vector<std::string>& leaves,
                    std::set<std::string>& internals,
                    std::vector<std::pair<std::string, std::string>>& route_edges, int depth) {
  internals.insert(root);
  if (depth == 1) {
    for (const auto& leaf : leaves) route_edges.emplace_back(root, leaf);
    return;
  }
  int count = static_cast<int>(leaves.size());
  int left = (count + 1) / 2;
  std::vector<std::vector<std::string>> parts{
      {leaves.begin(), leaves.begin() + left},
      {leaves.begin() + left, leaves.end()},
  };
  for (int side = 0; side < 2; ++side) {
    if (parts[side].empty()) continue;
    std::string child = root + (side ? "R" : "L");
    route_edges.emplace_back(root, child);
    attach_uniform(child, parts[side], internals, route_edges, depth - 1);
  }
}

}  // namespace

int degree3_budget(const CnfFormula& f) {
  return 2 * (ceil_log2(std::max(1, f.variables)) +
              ceil_log2(std::max(1, static_cast<int>(f.clauses.size()))) + 1);
}

PathSupport gen_hardness_degree3(const CnfFormula& f) {
  Builder b;
  int n = f.variables;
  int m = static_cast<int>(f.clauses.size());
  if (n < 1 || m < 1) throw Error(Errc::BadInput, "formula must have variables and clauses");
  int gadget_height = ceil_log2(std::max(1, n)) + ceil_log2(std::max(1, m)) + 1;

  std::vector<std::string> var_centers, clause_roots;
  for (int i = 1; i <= n; ++i) {
    std::string xc = "x" + std::to_string(i);
    var_centers.push_back(xc);
    b.edge(xc, "v" + std::to_string(i));
    b.edge(xc, "nv" + std::to_string(i));
  }
  std::map<std::string, std::array<std::string, 4>> clause_leaves;
  std::map<std::string, std::array<int, 4>> clause_lits;
  for (int j = 1; j <= m; ++j) {
    auto [l1, l2, l3] = f.clauses[j - 1];
    std::string root = "c" + std::to_string(j);
    clause_roots.push_back(root);
    b.edge(root, root + "a");
    b.edge(root, root + "b");
    std::array<std::string, 4> leaves{root + "a1", root + "a2", root + "b1", root + "b2"};
    b.edge(root + "a", leaves[0]);
    b.edge(root + "a", leaves[1]);
    b.edge(root + "b", leaves[2]);
    b.edge(root + "b", leaves[3]);
    clause_leaves[root] = leaves;
    clause_lits[root] = {l1, l2, l1, l3};
  }

  std::set<std::string> internals;
  std::vector<std::pair<std::string, std::string>> route_edges;
  attach_uniform("x", var_centers, internals, route_edges,
                 std::max(1, ceil_log2(std::max(1, n))));
  attach_uniform("cc", clause_roots, internals, route_edges,
                 std::max(1, ceil_log2(std::max(1, m))));

  // alignment gadgets replacing every internal route vertex
  std::map<std::string, std::array<std::string, 3>> gadget_ws;
  for (const auto& u : internals) {
    std::array<std::string, 3> ws{u + "!w1", u + "!w2", u + "!w3"};
    gadget_ws[u] = ws;
    std::string r1 = u + "!r1", r2 = u + "!r2";
    b.edge(r1, ws[0]);
    b.edge(ws[0], ws[1]);
    b.edge(ws[1], ws[2]);
    b.edge(ws[2], r2);
    std::vector<std::string> leaves1, leaves2;
    for (int side = 0; side < 2; ++side) {
      std::vector<std::string> frontier{side ? r2 : r1};
      for (int d = 0; d < gadget_height; ++d) {
        std::vector<std::string> next;
        for (const auto& p : frontier)
          for (int c = 0; c < 2; ++c) {
            std::string child = p + (c ? "r" : "l");
            b.edge(p, child);
            next.push_back(child);
          }
        frontier = next;
      }
      (side ? leaves2 : leaves1) = frontier;
    }
    int k = 0;
    for (const auto& la : leaves1)
      for (const auto& lc : leaves2) {
        std::vector<std::string> vs;
        for (std::string cur = la; cur != r1; cur = cur.substr(0, cur.size() - 1))
          vs.push_back(cur);
        vs.push_back(r1);
        vs.push_back(ws[0]);
        vs.push_back(ws[1]);
        vs.push_back(ws[2]);
        vs.push_back(r2);
        std::vector<std::string> tail;
        for (std::string cur = lc; cur != r2; cur = cur.substr(0, cur.size() - 1))
          tail.push_back(cur);
        std::reverse(tail.begin(), tail.end());
        vs.insert(vs.end(), tail.begin(), tail.end());
        b.path("g_" + u + "_" + std::to_string(k++), vs);
      }
  }

  // rewire route edges to gadget ports: parent side uses a child slot
  // (w1/w3), child side its w2; the x-cc bridge joins the two w2 ports.
  std::map<std::string, int> child_slot;
  auto child_port = [&](const std::string& u) -> std::string {
    if (!internals.count(u)) return u;
    int slot = child_slot[u]++;
    return slot == 0 ? gadget_ws[u][0] : gadget_ws[u][2];
  };
  auto parent_port = [&](const std::string& u) -> std::string {
    return internals.count(u) ? gadget_ws[u][1] : u;
  };
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> rewired;
  for (const auto& [parent, child] : route_edges) {
    std::string pa = child_port(parent);
    std::string ca = parent_port(child);
    b.edge(pa, ca);
    rewired[{parent, child}] = {pa, ca};
  }
  b.edge(gadget_ws["x"][1], gadget_ws["cc"][1]);

  std::map<std::string, std::string> route_parent;
  for (const auto& [parent, child] : route_edges) route_parent[child] = parent;
  // physical vertex sequence from a route leaf up to the w2 port of the
  // route root's gadget
  auto climb = [&](const std::string& from) {
    std::vector<std::string> vs{from};
    std::string cur = from;
    while (route_parent.count(cur)) {
      std::string parent = route_parent[cur];
      auto [pa, ca] = rewired.at({parent, cur});
      (void)ca;
      vs.push_back(pa);                    // w1 or w3 of the parent gadget
      vs.push_back(gadget_ws[parent][1]);  // cross to w2
      cur = parent;
    }
    return vs;
  };
  int qk = 0;
  for (int j = 1; j <= m; ++j) {
    std::string root = "c" + std::to_string(j);
    const auto& leaves = clause_leaves[root];
    const auto& lits = clause_lits[root];
    std::vector<std::string> up_c = climb(root);
    for (int t = 0; t < 4; ++t) {
      int lit = lits[t];
      std::string var_leaf = (lit > 0 ? std::string("v") : std::string("nv")) +
                             std::to_string(std::abs(lit));
      std::string xc = "x" + std::to_string(std::abs(lit));
      std::vector<std::string> vs;
      vs.push_back(leaves[t]);
      vs.push_back(t < 2 ? root + "a" : root + "b");
      vs.insert(vs.end(), up_c.begin(), up_c.end());
      // bridge from w2 of the cc gadget to w2 of the x gadget
      vs.push_back(gadget_ws["x"][1]);
      std::vector<std::string> down = climb(xc);
      down.pop_back();  // w2 of the x gadget is already in place
      std::reverse(down.begin(), down.end());
      vs.insert(vs.end(), down.begin(), down.end());
      vs.push_back(var_leaf);
      b.path("q" + std::to_string(qk++), vs);
    }
  }
  b.cover_leftovers("cov");
  return b.build();
}

// ---- random suites ----

PathSupport gen_random_tree_support(uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = uniform_in(rng, 4, 10);
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i) parent[i] = uniform_in(rng, 0, i - 1);
    auto depth = [&](int x) {
      int d = 0;
      while (parent[x] >= 0) {
        x = parent[x];
        ++d;
      }
      return d;
    };
    auto tree_path = [&](int u, int w) {
      std::vector<int> au{u}, aw{w};
      int du = depth(u), dw = depth(w);
      int a = u, c = w;
      while (du > dw) {
        a = parent[a];
        au.push_back(a);
        --du;
      }
      while (dw > du) {
        c = parent[c];
        aw.push_back(c);
        --dw;
      }
      while (a != c) {
        a = parent[a];
        au.push_back(a);
        c = parent[c];
        aw.push_back(c);
      }
      aw.pop_back();
      std::reverse(aw.begin(), aw.end());
      au.insert(au.end(), aw.begin(), aw.end());
      return au;
    };
    int num_paths = uniform_in(rng, 2, 6);
    std::vector<std::vector<int>> paths;
    for (int k = 0; k < num_paths; ++k) {
      int u = uniform_in(rng, 0, n - 1), w = uniform_in(rng, 0, n - 1);
      if (u == w) continue;
      paths.push_back(tree_path(u, w));
    }
    if (paths.size() < 2) continue;
    std::set<int> used;
    for (const auto& p : paths)
      for (int v : p) used.insert(v);
    std::map<int, int> remap;
    for (int v : used) remap[v] = static_cast<int>(remap.size());
    std::set<std::pair<int, int>> edges;
    for (const auto& p : paths)
      for (size_t i = 0; i + 1 < p.size(); ++i)
        edges.insert(std::minmax(remap[p[i]], remap[p[i + 1]]));
    if (remap.size() < 2 || edges.size() != remap.size() - 1) continue;
    std::vector<int> uf(remap.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (auto [a, c] : edges) uf[find(a)] = find(c);
    bool connected = true;
    for (size_t i = 0; i < uf.size(); ++i)
      if (find(static_cast<int>(i)) != find(0)) connected = false;
    if (!connected) continue;

    std::vector<std::string> names;
    for (size_t i = 0; i < remap.size(); ++i) names.push_back("v" + std::to_string(i));
    std::vector<Path> ps;
    for (size_t k = 0; k < paths.size(); ++k) {
      Path p;
      p.id = "p" + std::to_string(k);
      for (int v : paths[k]) p.verts.push_back(remap[v]);
      ps.push_back(std::move(p));
    }
    return PathSupport::from_indexed(std::move(names),
                                     {edges.begin(), edges.end()}, std::move(ps));
  }
  throw Error(Errc::BadInput, "random tree generation failed");
}

namespace {

PathSupport random_cactus_impl(uint64_t seed, bool require_linear) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8192; ++attempt) {
    int target = uniform_in(rng, 5, 10);
    std::vector<std::vector<int>> adj{{}};
    auto add_edge = [&](int a, int c) {
      adj[a].push_back(c);
      adj[c].push_back(a);
    };
    while (static_cast<int>(adj.size()) < target) {
      int at = uniform_in(rng, 0, static_cast<int>(adj.size()) - 1);
      if (rng() % 2 == 0 && static_cast<int>(adj.size()) + 3 <= target + 1) {
        int len = uniform_in(rng, 3, 4);
        int prev = at;
        for (int i = 0; i < len - 1; ++i) {
          int v = static_cast<int>(adj.size());
          adj.push_back({});
          add_edge(prev, v);
          prev = v;
        }
        add_edge(prev, at);
      } else {
        int v = static_cast<int>(adj.size());
        adj.push_back({});
        add_edge(at, v);
      }
    }
    int n = static_cast<int>(adj.size());
    int num_paths = uniform_in(rng, 2, 5);
    std::vector<std::vector<int>> paths;
    for (int k = 0; k < num_paths; ++k) {
      int start = uniform_in(rng, 0, n - 1);
      std::vector<int> walk{start};
      std::set<int> seen{start};
      int len = uniform_in(rng, 1, 6);
      int cur = start;
      for (int step = 0; step < len; ++step) {
        std::vector<int> options;
        for (int w : adj[cur])
          if (!seen.count(w)) options.push_back(w);
        if (options.empty()) break;
        std::sort(options.begin(), options.end());
        cur = options[uniform_in(rng, 0, static_cast<int>(options.size()) - 1)];
        walk.push_back(cur);
        seen.insert(cur);
      }
      if (walk.size() >= 2) paths.push_back(walk);
    }
    if (paths.size() < 2) continue;
    std::set<int> used;
    for (const auto& p : paths)
      for (int v : p) used.insert(v);
    std::map<int, int> remap;
    for (int v : used) remap[v] = static_cast<int>(remap.size());
    std::set<std::pair<int, int>> sub_edges;
    for (const auto& p : paths)
      for (size_t i = 0; i + 1 < p.size(); ++i)
        sub_edges.insert(std::minmax(remap[p[i]], remap[p[i + 1]]));
    if (remap.size() < 2) continue;
    std::vector<std::string> names;
    for (size_t i = 0; i < remap.size(); ++i) names.push_back("v" + std::to_string(i));
    std::vector<Path> ps;
    for (size_t k = 0; k < paths.size(); ++k) {
      Path p;
      p.id = "p" + std::to_string(k);
      for (int v : paths[k]) p.verts.push_back(remap[v]);
      ps.push_back(std::move(p));
    }
    PathSupport s = PathSupport::from_indexed(std::move(names),
                                              {sub_edges.begin(), sub_edges.end()},
                                              std::move(ps));
    if (!s.connected() || !is_cactus(s)) continue;
    if (require_linear && (!is_linear(s) || is_tree(s))) continue;
    return s;
  }
  if (require_linear) {
    // constructive fallback: a chain of bridges ending in a square whose far
    // edges are covered by single-edge paths (always a linear cactus)
    int tail = uniform_in(rng, 0, 3);
    Builder b;
    std::vector<std::string> walk;
    for (int i = 0; i <= tail; ++i) walk.push_back("v" + std::to_string(i));
    if (walk.size() >= 2) b.path("p0", walk);
    std::string at = walk.back();
    b.path("p1", {"q1", at, "q2"});
    b.path("p2", {"q1", "m"});
    b.path("p3", {"m", "q2"});
    if (walk.size() < 2) b.vertex(at);
    return b.build();
  }
  throw Error(Errc::BadInput, "random cactus generation failed");
}

}  // namespace

PathSupport gen_random_cactus_support(uint64_t seed) { return random_cactus_impl(seed, false); }

PathSupport gen_random_linear_cactus_support(uint64_t seed) {
  return random_cactus_impl(seed, true);
}

PathSupport gen_random_plane4_support(int rows, int cols, int num_paths, uint64_t seed) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw Error(Errc::BadInput, "grid must have at least two vertices");
  std::mt19937_64 rng(seed);
  Builder b;
  auto name = [](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.edge(name(r, c), name(r, c + 1));
      if (r + 1 < rows) b.edge(name(r, c), name(r + 1, c));
    }
  for (int k = 0; k < num_paths; ++k) {
    int r = uniform_in(rng, 0, rows - 1), c = uniform_in(rng, 0, cols - 1);
    std::vector<std::string> vs{name(r, c)};
    int len = uniform_in(rng, 1, rows + cols - 2);
    for (int step = 0; step < len; ++step) {
      bool can_right = c + 1 < cols, can_down = r + 1 < rows;
      if (!can_right && !can_down) break;
      bool right = can_right && (!can_down || rng() % 2 == 0);
      if (right)
        ++c;
      else
        ++r;
      vs.push_back(name(r, c));
    }
    if (vs.size() >= 2) b.path("p" + std::to_string(k), vs);
  }
  b.cover_leftovers("cov");

  PathSupport tmp = b.build();
  PlaneEmbedding emb;
  emb.rotation.assign(tmp.vertex_count(), {});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = tmp.vertex_index(name(r, c));
      // counterclockwise with row 0 on top: E, N, W, S
      std::vector<std::pair<int, int>> dirs{{r, c + 1}, {r - 1, c}, {r, c - 1}, {r + 1, c}};
      for (auto [rr, cc] : dirs) {
        if (rr < 0 || cc < 0 || rr >= rows || cc >= cols) continue;
        int w = tmp.vertex_index(name(rr, cc));
        if (w >= 0 && tmp.edge_index(v, w) >= 0) emb.rotation[v].push_back(w);
      }
    }
  emb.outer_dart = {tmp.vertex_index(name(0, 0)),
                    cols > 1 ? tmp.vertex_index(name(0, 1)) : tmp.vertex_index(name(1, 0))};
  std::vector<std::string> names;
  for (int v = 0; v < tmp.vertex_count(); ++v) names.push_back(tmp.vertex_name(v));
  std::vector<Path> ps;
  for (const auto& p : tmp.paths()) ps.push_back(p);
  return PathSupport::from_indexed(std::move(names), tmp.edges(), std::move(ps), emb);
}

}  // namespace bendix
