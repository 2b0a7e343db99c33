#include "bendix/tree_opt.hpp"

#include <algorithm>

#include "bendix/twosat.hpp"

namespace bendix {

LocalMatchingInstance local_matching_instance(const PathSupport& s, int v) {
  LocalMatchingInstance inst;
  inst.vertex = v;
  inst.nodes = s.adj(v);
  int k = static_cast<int>(inst.nodes.size());
  inst.weights.assign(k, std::vector<long long>(k, 0));
  auto node_pos = [&](int u) {
    return static_cast<int>(std::lower_bound(inst.nodes.begin(), inst.nodes.end(), u) -
                            inst.nodes.begin());
  };
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    for (size_t i = 1; i + 1 < verts.size(); ++i)
      if (verts[i] == v) {
        int a = node_pos(verts[i - 1]);
        int b = node_pos(verts[i + 1]);
        ++inst.weights[a][b];
        ++inst.weights[b][a];
      }
  }
  return inst;
}

MatchingResult solve_local_matching(const LocalMatchingInstance& inst) {
  return max_weight_matching_lex(inst.weights);
}

TotalBendsResult minimize_total_bends(const PathSupport& s) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "total-bend minimization requires a tree support");
  TotalBendsResult result;
  for (int v = 0; v < s.vertex_count(); ++v) {
    LocalMatchingInstance inst = local_matching_instance(s, v);
    MatchingResult m = solve_local_matching(inst);
    for (auto [a, b] : m.pairs)
      result.alignment.add(s.edge_index(v, inst.nodes[a]), s.edge_index(v, inst.nodes[b]));
  }
  result.alignment.canonicalize();
  result.total = count_bends(s, result.alignment).total;
  return result;
}

namespace {

// Variables x_{e1 e2} per adjacent edge pair, true = not aligned.
struct PairVars {
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> shared;  // vertex shared by the pair

  int id(int e1, int e2) const {
    if (e1 > e2) std::swap(e1, e2);
    return index.at({e1, e2});
  }
};

PairVars collect_pair_vars(const PathSupport& s) {
  PairVars pv;
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& inc = s.incident_edges(v);
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        pv.index[{inc[i], inc[j]}] = static_cast<int>(pv.pairs.size());
        pv.pairs.emplace_back(inc[i], inc[j]);
        pv.shared.push_back(v);
      }
  }
  return pv;
}

}  // namespace

std::optional<Alignment> curve_complexity_le(const PathSupport& s, int b) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "the 2-SAT formulation requires a tree support");
  if (b != 0 && b != 1) throw Error(Errc::BadInput, "curve_complexity_le decides b = 0 or 1 only");

  PairVars pv = collect_pair_vars(s);
  TwoSat sat(static_cast<int>(pv.pairs.size()));

  // consistency: two pairs sharing an edge at a vertex cannot both be aligned
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& inc = s.incident_edges(v);
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        for (size_t k = j + 1; k < inc.size(); ++k) {
          int xij = pv.id(inc[i], inc[j]);
          int xik = pv.id(inc[i], inc[k]);
          int xjk = pv.id(inc[j], inc[k]);
          sat.add_clause(xij, true, xik, true);
          sat.add_clause(xij, true, xjk, true);
          sat.add_clause(xik, true, xjk, true);
        }
  }

  for (int p = 0; p < s.path_count(); ++p) {
    const auto& es = s.path_edges(p);
    if (b == 0) {
      for (size_t i = 0; i + 1 < es.size(); ++i) sat.add_unit(pv.id(es[i], es[i + 1]), false);
    } else {
      // at most one unaligned adjacent pair along the path
      for (size_t i = 0; i + 1 < es.size(); ++i)
        for (size_t j = i + 1; j + 1 < es.size(); ++j)
          sat.add_clause(pv.id(es[i], es[i + 1]), false, pv.id(es[j], es[j + 1]), false);
    }
  }

  auto assignment = sat.solve();
  if (!assignment) return std::nullopt;
  Alignment alignment;
  for (size_t x = 0; x < pv.pairs.size(); ++x)
    if (!(*assignment)[x]) alignment.add(pv.pairs[x].first, pv.pairs[x].second);
  alignment.canonicalize();
  check_alignment(s, alignment);
  return alignment;
}

std::vector<int> caterpillar_spine(const PathSupport& s) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "caterpillar check requires a tree");
  int n = s.vertex_count();
  std::vector<int> spine_verts;
  for (int v = 0; v < n; ++v)
    if (s.degree(v) >= 2) spine_verts.push_back(v);
  if (spine_verts.empty()) return {};
  // the non-leaf vertices must induce a path
  std::vector<int> inner_deg(n, 0);
  for (int v : spine_verts)
    for (int w : s.adj(v))
      if (s.degree(w) >= 2) ++inner_deg[v];
  int ends = 0, start = -1;
  for (int v : spine_verts) {
    if (inner_deg[v] > 2) throw Error(Errc::NotACaterpillar, "non-leaf vertices do not form a path");
    if (inner_deg[v] <= 1) {
      ++ends;
      if (start < 0) start = v;
    }
  }
  if (spine_verts.size() == 1) return spine_verts;
  if (ends != 2) throw Error(Errc::NotACaterpillar, "non-leaf vertices do not form a path");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : s.adj(cur))
      if (w != prev && s.degree(w) >= 2) {
        next = w;
        break;
      }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != spine_verts.size())
    throw Error(Errc::NotACaterpillar, "non-leaf vertices do not form a path");
  return order;
}

bool is_caterpillar(const PathSupport& s) {
  try {
    caterpillar_spine(s);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotACaterpillar) return false;
    throw;
  }
}

Alignment caterpillar_draw(const PathSupport& s) {
  std::vector<int> spine = caterpillar_spine(s);  // throws if not a caterpillar
  Alignment a;
  for (size_t i = 0; i + 2 < spine.size(); ++i)
    a.add(s.edge_index(spine[i], spine[i + 1]), s.edge_index(spine[i + 1], spine[i + 2]));
  // extend the spine line through one leaf at each end
  auto leaf_at = [&](int v, int skip1, int skip2) {
    for (int w : s.adj(v))
      if (s.degree(w) == 1 && w != skip1 && w != skip2) return w;
    return -1;
  };
  if (spine.size() == 1) {
    int l1 = leaf_at(spine[0], -1, -1);
    int l2 = leaf_at(spine[0], l1, -1);
    if (l1 >= 0 && l2 >= 0)
      a.add(s.edge_index(spine[0], l1), s.edge_index(spine[0], l2));
  } else if (!spine.empty()) {
    int front = leaf_at(spine.front(), -1, -1);
    if (front >= 0)
      a.add(s.edge_index(spine.front(), front), s.edge_index(spine.front(), spine[1]));
    int back = leaf_at(spine.back(), -1, -1);
    if (back >= 0)
      a.add(s.edge_index(spine.back(), back),
            s.edge_index(spine.back(), spine[spine.size() - 2]));
  }
  a.canonicalize();
  check_alignment(s, a);
  return a;
}

}  // namespace bendix
