#include "bendix/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

namespace bendix {

namespace {

struct VertexPairs {
  int vertex = -1;
  std::vector<std::pair<int, int>> pairs;        // carried edge pairs (e1 < e2)
  std::vector<std::vector<int>> riders;          // paths traversing each pair
  std::vector<uint64_t> conflict;                // pair i conflicts with mask
  std::vector<int> pair_cycle;                   // cycle id of the pair, or -1
};

struct Prepared {
  std::vector<VertexPairs> verts;                // only vertices with carried pairs
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_len;
  std::vector<int> cycle_carried_total;
  std::vector<int> edge_cycle;                   // per edge: containing cycle or -1
  bool cactus_mode = false;
};

Prepared prepare(const PathSupport& s) {
  Prepared prep;
  GraphClass cls = validate(s);
  if (cls.kind != GraphClass::Tree && cls.kind != GraphClass::Cactus)
    throw Error(Errc::BadInput, "oracle handles tree and cactus supports");
  prep.cactus_mode = cls.kind == GraphClass::Cactus;

  int n = s.vertex_count();
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> carried(n);
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    for (size_t i = 1; i + 1 < verts.size(); ++i) {
      int e1 = es[i - 1], e2 = es[i];
      if (e1 > e2) std::swap(e1, e2);
      carried[verts[i]][{e1, e2}].push_back(p);
    }
  }

  prep.edge_cycle.assign(s.edge_count(), -1);
  std::map<std::pair<int, std::pair<int, int>>, int> cycle_pair_at;
  if (prep.cactus_mode) {
    prep.cycles = cactus_cycles(s);
    for (int c = 0; c < static_cast<int>(prep.cycles.size()); ++c) {
      const auto& cyc = prep.cycles[c];
      int len = static_cast<int>(cyc.size());
      prep.cycle_len.push_back(len);
      prep.cycle_carried_total.push_back(0);
      for (int i = 0; i < len; ++i) {
        int v = cyc[i];
        int prev = cyc[(i + len - 1) % len];
        int next = cyc[(i + 1) % len];
        prep.edge_cycle[s.edge_index(v, next)] = c;
        int e1 = s.edge_index(v, prev), e2 = s.edge_index(v, next);
        if (e1 > e2) std::swap(e1, e2);
        if (carried[v].count({e1, e2})) {
          cycle_pair_at[{v, {e1, e2}}] = c;
          ++prep.cycle_carried_total[c];
        }
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (carried[v].empty()) continue;
    VertexPairs vp;
    vp.vertex = v;
    for (const auto& [pr, riders] : carried[v]) {
      vp.pairs.push_back(pr);
      vp.riders.push_back(riders);
      auto it = cycle_pair_at.find({v, pr});
      vp.pair_cycle.push_back(it == cycle_pair_at.end() ? -1 : it->second);
    }
    if (vp.pairs.size() > 63) throw Error(Errc::TooLarge, "too many edge pairs at one vertex");
    vp.conflict.assign(vp.pairs.size(), 0);
    for (size_t i = 0; i < vp.pairs.size(); ++i)
      for (size_t j = 0; j < vp.pairs.size(); ++j) {
        if (i == j) continue;
        auto [a, b] = vp.pairs[i];
        auto [c, d] = vp.pairs[j];
        if (a == c || a == d || b == c || b == d) vp.conflict[i] |= uint64_t(1) << j;
      }
    prep.verts.push_back(std::move(vp));
  }
  return prep;
}

long long count_matchings(const VertexPairs& vp, long long cap) {
  long long total = 0;
  std::function<void(size_t, uint64_t)> rec = [&](size_t i, uint64_t blocked) {
    if (total > cap) return;
    if (i == vp.pairs.size()) {
      ++total;
      return;
    }
    rec(i + 1, blocked);
    if (!(blocked >> i & 1)) rec(i + 1, blocked | vp.conflict[i]);
  };
  rec(0, 0);
  return total;
}

class Search {
 public:
  Search(const PathSupport& s, const Prepared& prep, OracleObjective obj,
         const OracleOptions& opt)
      : s_(s), prep_(prep), obj_(obj), opt_(opt) {
    bends_.assign(std::max(1, s.path_count()), 0);
    chosen_.assign(prep.verts.size(), 0);
    witness_chosen_.assign(prep.verts.size(), 0);
    cycle_aligned_.assign(prep.cycles.size(), 0);
    cycle_pending_ = prep.cycle_carried_total;
    start_ = std::chrono::steady_clock::now();
    int cap = 0;
    for (const auto& p : s.paths()) cap = std::max(cap, p.interior_count());
    path_cap_ = opt.budget.value_or(cap);
    if (obj != OracleObjective::Curve && obj != OracleObjective::LexVector && !opt.budget)
      path_cap_ = cap;
  }

  OracleResult run() {
    OracleResult r;
    if (opt_.branch_and_bound && obj_ == OracleObjective::Curve && opt_.budget && !opt_.planar) {
      std::vector<int> all(prep_.verts.size());
      std::iota(all.begin(), all.end(), 0);
      order_most_constrained(all);
      found_ = feasible_components(all);
      if (found_) {
        for (size_t i = 0; i < prep_.verts.size(); ++i) chosen_[i] = witness_chosen_[i];
        best_alignment_ = current_alignment();
      }
    } else {
      order_.resize(prep_.verts.size());
      std::iota(order_.begin(), order_.end(), 0);
      if (opt_.branch_and_bound) order_most_constrained(order_);
      descend(0);
    }
    r.enumerated = enumerated_;
    r.feasible = found_;
    if (found_) {
      r.witness = best_alignment_;
      BendReport rep = count_bends(s_, r.witness);
      r.total = rep.total;
      r.curve = rep.curve;
      r.vector = rep.vector;
      if (opt_.focus_path >= 0) r.focus_bends = rep.per_path[opt_.focus_path];
    }
    r.targets_achievable = targets_found_;
    return r;
  }

 private:
  void order_most_constrained(std::vector<int>& order) const {
    // vertices traversed by many paths first: processing them early lets the
    // remaining search split into independent components
    auto riders_at = [&](int vi) {
      std::set<int> paths;
      for (const auto& riders : prep_.verts[vi].riders)
        paths.insert(riders.begin(), riders.end());
      return paths.size();
    };
    std::vector<size_t> weight(prep_.verts.size());
    for (size_t i = 0; i < prep_.verts.size(); ++i) weight[i] = riders_at(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (weight[a] != weight[b]) return weight[a] > weight[b];
      return prep_.verts[a].pairs.size() > prep_.verts[b].pairs.size();
    });
  }

  void check_wall() {
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (sec > opt_.wall_limit_sec) throw Error(Errc::TooLarge, "oracle wall budget exceeded");
  }

  // ---- plain exhaustive path ----

  void descend(size_t oi) {
    if (oi == order_.size()) {
      record_solution();
      return;
    }
    enumerate_matchings(oi, order_[oi], 0, 0);
  }

  void enumerate_matchings(size_t oi, int vi, size_t idx, uint64_t blocked) {
    const auto& vp = prep_.verts[vi];
    if (idx == vp.pairs.size()) {
      if (apply(vi)) descend(oi + 1);
      undo(vi);
      return;
    }
    enumerate_matchings(oi, vi, idx + 1, blocked);
    if (!(blocked >> idx & 1)) {
      chosen_[vi] |= uint64_t(1) << idx;
      enumerate_matchings(oi, vi, idx + 1, blocked | vp.conflict[idx]);
      chosen_[vi] &= ~(uint64_t(1) << idx);
    }
  }

  // Applies the matching chosen_[vi]; returns false if a prune condition
  // fires (caller must still undo).
  bool apply(int vi) {
    if ((++steps_ & 0x3fff) == 0) check_wall();
    const auto& vp = prep_.verts[vi];
    bool ok = true;
    for (size_t k = 0; k < vp.pairs.size(); ++k) {
      bool aligned = chosen_[vi] >> k & 1;
      if (!aligned)
        for (int p : vp.riders[k]) {
          if (++bends_[p] > path_cap_ && prunes_on_cap()) ok = false;
        }
      int c = vp.pair_cycle[k];
      if (c >= 0) {
        if (aligned) ++cycle_aligned_[c];
        if (--cycle_pending_[c] == 0 && prep_.cycle_len[c] - cycle_aligned_[c] < 3) ok = false;
      }
    }
    return ok;
  }

  void undo(int vi) {
    const auto& vp = prep_.verts[vi];
    for (size_t k = 0; k < vp.pairs.size(); ++k) {
      bool aligned = chosen_[vi] >> k & 1;
      if (!aligned)
        for (int p : vp.riders[k]) --bends_[p];
      int c = vp.pair_cycle[k];
      if (c >= 0) {
        if (aligned) --cycle_aligned_[c];
        ++cycle_pending_[c];
      }
    }
  }

  bool prunes_on_cap() const {
    switch (obj_) {
      case OracleObjective::Curve:
      case OracleObjective::LexVector:
        return true;
      case OracleObjective::Total:
      case OracleObjective::NaeTargets:
        return opt_.budget.has_value();
      case OracleObjective::FocusPath:
        return false;
    }
    return false;
  }

  void record_solution() {
    ++enumerated_;
    if ((enumerated_ & 0xffff) == 0) check_wall();
    if (prep_.cactus_mode && opt_.planar && !planar_ok()) return;

    switch (obj_) {
      case OracleObjective::Total: {
        long long total = 0;
        for (int b : bends_) total += b;
        if (!found_ || total < best_value_) keep(total);
        break;
      }
      case OracleObjective::Curve: {
        int curve = 0;
        for (int b : bends_) curve = std::max(curve, b);
        if (curve > path_cap_) return;
        if (!found_ || curve < best_value_) keep(curve);
        break;
      }
      case OracleObjective::FocusPath: {
        long long v = bends_[opt_.focus_path];
        if (!found_ || v < best_value_) keep(v);
        break;
      }
      case OracleObjective::LexVector: {
        BendVector vec = BendVector::from_bends(bends_);
        if (!found_ || compare_bend_vectors(vec, best_vector_) > 0) {
          best_vector_ = vec;
          keep(0);
        }
        break;
      }
      case OracleObjective::NaeTargets: {
        long long c0 = 0, c1 = 0;
        for (int b : bends_) {
          if (b == 0) ++c0;
          if (b == 1) ++c1;
        }
        if (c0 >= opt_.nae_n0 && c1 >= opt_.nae_n1) {
          targets_found_ = true;
          if (!found_) keep(0);
        }
        break;
      }
    }
  }

  void keep(long long value) {
    found_ = true;
    best_value_ = value;
    best_alignment_ = current_alignment();
  }

  Alignment current_alignment() const {
    Alignment a;
    for (size_t i = 0; i < prep_.verts.size(); ++i) {
      const auto& vp = prep_.verts[i];
      for (size_t k = 0; k < vp.pairs.size(); ++k)
        if (chosen_[i] >> k & 1) a.add(vp.pairs[k].first, vp.pairs[k].second);
    }
    a.canonicalize();
    return a;
  }

  // ---- budgeted feasibility with component decomposition (B&B) ----

  // Vertices interact when a path has interior vertices at both or when
  // they carry pairs of a common cycle.
  std::vector<std::vector<int>> split_components(const std::vector<int>& vis) const {
    std::map<int, int> pos;
    for (size_t i = 0; i < vis.size(); ++i) pos[vis[i]] = static_cast<int>(i);
    std::vector<int> parent(vis.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::map<int, int> path_first, cycle_first;
    for (size_t i = 0; i < vis.size(); ++i) {
      const auto& vp = prep_.verts[vis[i]];
      for (size_t k = 0; k < vp.pairs.size(); ++k) {
        for (int p : vp.riders[k]) {
          auto [it, fresh] = path_first.try_emplace(p, static_cast<int>(i));
          if (!fresh) unite(it->second, static_cast<int>(i));
        }
        if (vp.pair_cycle[k] >= 0) {
          auto [it, fresh] = cycle_first.try_emplace(vp.pair_cycle[k], static_cast<int>(i));
          if (!fresh) unite(it->second, static_cast<int>(i));
        }
      }
    }
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < vis.size(); ++i) groups[find(static_cast<int>(i))].push_back(vis[i]);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
  }

  bool feasible_components(const std::vector<int>& vis) {
    if (vis.empty()) return true;
    auto comps = split_components(vis);
    if (comps.size() > 1) {
      for (auto& comp : comps)
        if (!feasible_rec(comp)) return false;
      return true;
    }
    return feasible_rec(comps[0]);
  }

  bool feasible_rec(const std::vector<int>& vis) {
    if (vis.empty()) return true;
    int vi = vis[0];
    std::vector<int> rest(vis.begin() + 1, vis.end());
    const auto& vp = prep_.verts[vi];
    bool ok = false;
    std::function<void(size_t, uint64_t)> rec = [&](size_t idx, uint64_t blocked) {
      if (ok) return;
      if (idx == vp.pairs.size()) {
        if (apply(vi)) {
          if (feasible_components(rest)) {
            witness_chosen_[vi] = chosen_[vi];
            ok = true;
          }
        }
        undo(vi);
        return;
      }
      rec(idx + 1, blocked);
      if (!ok && !(blocked >> idx & 1)) {
        chosen_[vi] |= uint64_t(1) << idx;
        rec(idx + 1, blocked | vp.conflict[idx]);
        chosen_[vi] &= ~(uint64_t(1) << idx);
      }
    };
    rec(0, 0);
    return ok;
  }

  bool planar_ok() const {
    // Per-vertex planar zero-split conditions under the chosen alignment:
    // (i) at most one cycle aligned at the vertex, (ii) when one is aligned,
    // the constraint graph over cycles at the vertex is bipartite.
    for (size_t i = 0; i < prep_.verts.size(); ++i) {
      const auto& vp = prep_.verts[i];
      int aligned_cycles = 0;
      std::map<int, std::vector<int>> h_adj;
      bool any_cross = false;
      for (size_t k = 0; k < vp.pairs.size(); ++k) {
        if (!(chosen_[i] >> k & 1)) continue;
        if (vp.pair_cycle[k] >= 0) ++aligned_cycles;
        int c1 = prep_.edge_cycle[vp.pairs[k].first];
        int c2 = prep_.edge_cycle[vp.pairs[k].second];
        if (c1 >= 0 && c2 >= 0 && c1 != c2) {
          h_adj[c1].push_back(c2);
          h_adj[c2].push_back(c1);
          any_cross = true;
        }
      }
      if (aligned_cycles > 1) return false;
      if (aligned_cycles == 0 || !any_cross) continue;
      std::map<int, int> color;
      for (const auto& [c, _] : h_adj) {
        if (color.count(c)) continue;
        color[c] = 0;
        std::vector<int> stack{c};
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          auto it = h_adj.find(x);
          if (it == h_adj.end()) continue;
          for (int y : it->second) {
            if (!color.count(y)) {
              color[y] = color[x] ^ 1;
              stack.push_back(y);
            } else if (color[y] == color[x]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  const PathSupport& s_;
  const Prepared& prep_;
  OracleObjective obj_;
  const OracleOptions& opt_;

  std::vector<int> order_;
  std::vector<int> bends_;
  std::vector<uint64_t> chosen_;
  std::vector<uint64_t> witness_chosen_;
  std::vector<int> cycle_aligned_;
  std::vector<int> cycle_pending_;

  bool found_ = false;
  bool targets_found_ = false;
  long long best_value_ = 0;
  BendVector best_vector_;
  Alignment best_alignment_;
  long long enumerated_ = 0;
  long long steps_ = 0;
  int path_cap_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

OracleResult oracle_solve(const PathSupport& support, OracleObjective objective,
                          const OracleOptions& options) {
  if (objective == OracleObjective::FocusPath &&
      (options.focus_path < 0 || options.focus_path >= support.path_count()))
    throw Error(Errc::BadInput, "focus path out of range");
  Prepared prep = prepare(support);
  if (!options.branch_and_bound) {
    if (support.vertex_count() > options.max_vertices)
      throw Error(Errc::TooLarge, "instance exceeds the oracle vertex cap");
    if (support.path_count() > options.max_paths)
      throw Error(Errc::TooLarge, "instance exceeds the oracle path cap");
    long long product = 1;
    for (const auto& vp : prep.verts) {
      product *= std::max<long long>(1, count_matchings(vp, options.max_alignments + 1));
      if (product > options.max_alignments)
        throw Error(Errc::TooLarge, "instance exceeds the oracle alignment cap");
    }
  }
  Search search(support, prep, objective, options);
  return search.run();
}

}  // namespace bendix
