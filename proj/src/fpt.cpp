#include "bendix/fpt.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "bendix/matching.hpp"

namespace bendix {

namespace {

// ---------- record dynamic program ----------

struct Record {
  std::vector<int8_t> key;  // open-path bends, then the cycle counter if any
  int curve = 0;            // curve mode quality
  std::vector<int> vec;     // lex mode quality: completed paths per bend count
  // provenance
  std::vector<std::pair<int, int>> pairs;        // alignment pairs chosen here
  std::vector<std::pair<int, int>> child_recs;   // (child vertex, record index)
};

struct SourceRef {
  int slot = -1;  // engaged child slot
  int pos = -1;   // position in that child's key
};

struct PathPlan {
  int path = -1;
  SourceRef src[2];
  int nsrc = 0;
  int pair_idx = -1;  // interior pair at this vertex
  int out_pos = -1;   // position in the new key, -1 when the path completes
};

struct CycleOp {
  enum Kind { Arrival, Middle, Root } kind = Arrival;
  int cycle = -1;
  int pair_idx = -1;  // pair of the two cycle edges at this vertex, -1 = never aligned
  SourceRef d_src;    // cycle child's counter (Middle/Root)
};

struct VertexPlan {
  std::vector<int> engaged;
  std::vector<std::pair<int, int>> disengaged_choice;  // (child, record index), filled later
  std::vector<int> disengaged;
  std::vector<std::pair<int, int>> pairs;
  std::vector<uint64_t> conflict;
  std::vector<PathPlan> paths;
  std::vector<CycleOp> cycle_ops;
  int key_size = 0;
  int d_pos = -1;
  // planar data
  std::vector<int> cycles_through;
  std::vector<int> pair_cyc1, pair_cyc2;  // cycles of the two pair edges (-1 = none)
  std::vector<int> pair_cycle_self;       // cycle whose corner this pair closes, or -1
};

struct DpOptions {
  int budget = 0;
  bool lex = false;
  bool planar = false;
};

class DpEngine {
 public:
  DpEngine(const PathSupport& s, DpOptions opt) : s_(s), opt_(opt) { build_structure(); }

  DpResult run() {
    for (int v : post_order_) process_vertex(v);
    DpResult result;
    const auto& root_records = records_[root_];
    if (root_records.empty()) return result;
    int best = 0;
    for (size_t i = 1; i < root_records.size(); ++i)
      if (better(root_records[i], root_records[best])) best = static_cast<int>(i);
    result.feasible = true;
    result.curve = root_records[best].curve;
    result.vector.counts.assign(root_records[best].vec.begin(), root_records[best].vec.end());
    result.vector.normalize();
    collect_alignment(root_, best, result.alignment);
    result.alignment.canonicalize();
    return result;
  }

 private:
  // rooted structure over the spanning tree obtained by cutting one
  // root-incident edge per cycle (the DFS back edge)
  void build_structure() {
    int n = s_.vertex_count();
    parent_.assign(n, -1);
    parent_edge_.assign(n, -1);
    depth_.assign(n, 0);
    children_.assign(n, {});
    cycle_at_.assign(n, -1);
    arrival_.assign(n, -1);
    rooted_.assign(n, {});
    edge_cycle_.assign(s_.edge_count(), -1);
    root_ = 0;

    // true depth-first tree so that every non-tree edge joins a vertex with
    // one of its ancestors
    std::vector<char> visited(n, 0);
    struct Frame {
      int v;
      size_t next = 0;
    };
    std::vector<Frame> frames{{root_, 0}};
    visited[root_] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < s_.adj(f.v).size()) {
        int w = s_.adj(f.v)[f.next++];
        if (visited[w]) continue;
        visited[w] = 1;
        parent_[w] = f.v;
        parent_edge_[w] = s_.edge_index(f.v, w);
        depth_[w] = depth_[f.v] + 1;
        children_[f.v].push_back(w);
        frames.push_back({w, 0});
      } else {
        frames.pop_back();
      }
    }
    // back edges close the cycles
    for (int e = 0; e < s_.edge_count(); ++e) {
      auto [a, b] = s_.edge(e);
      if (parent_edge_[a] == e || parent_edge_[b] == e) continue;
      int u = depth_[a] > depth_[b] ? a : b;  // t_C
      int r = u == a ? b : a;                 // r_C
      Cycle c;
      c.back_edge = e;
      c.t = u;
      c.r = r;
      int id = static_cast<int>(cycles_.size());
      for (int x = u; x != r; x = parent_[x]) {
        c.verts.push_back(x);
        if (cycle_at_[x] != -1) throw Error(Errc::NotACactus, "edge on two cycles");
        cycle_at_[x] = id;
        if (x != u) cycle_child_[{id, x}] = c.verts[c.verts.size() - 2];
        if (x != u) edge_cycle_[s_.edge_index(x, c.verts[c.verts.size() - 2])] = id;
      }
      edge_cycle_[s_.edge_index(parent_[c.verts.back()], c.verts.back())] = id;
      edge_cycle_[e] = id;
      c.verts.push_back(r);
      cycle_child_[{id, r}] = c.verts[c.verts.size() - 2];
      arrival_[u] = id;
      rooted_[r].push_back(id);
      cycles_.push_back(std::move(c));
    }
    // post order
    post_order_.clear();
    std::vector<std::pair<int, size_t>> st{{root_, 0}};
    while (!st.empty()) {
      auto& [v, idx] = st.back();
      if (idx < children_[v].size()) {
        int w = children_[v][idx++];
        st.push_back({w, 0});
      } else {
        post_order_.push_back(v);
        st.pop_back();
      }
    }

    // open lists
    open_list_.assign(n, {});
    open_pos_.assign(n, {});
    for (int v = 0; v < n; ++v) {
      std::set<int> open;
      if (parent_edge_[v] >= 0)
        for (int p : s_.paths_on_edge(parent_edge_[v])) open.insert(p);
      if (cycle_at_[v] >= 0)
        for (int p : s_.paths_on_edge(cycles_[cycle_at_[v]].back_edge)) open.insert(p);
      open_list_[v].assign(open.begin(), open.end());
      for (size_t i = 0; i < open_list_[v].size(); ++i) open_pos_[v][open_list_[v][i]] = i;
    }
    records_.assign(n, {});
    plans_.assign(n, {});
  }

  std::pair<int, int> interior_pair(int p, int v) const {
    const auto& verts = s_.path(p).verts;
    const auto& es = s_.path_edges(p);
    for (size_t i = 1; i + 1 < verts.size(); ++i)
      if (verts[i] == v) return {es[i - 1], es[i]};
    return {-1, -1};
  }

  // two edges of cycle c at vertex v
  std::pair<int, int> cycle_edges_at(int c, int v) const {
    const Cycle& cy = cycles_[c];
    if (v == cy.r) return {cy.back_edge, s_.edge_index(v, cycle_child_.at({c, v}))};
    if (v == cy.t) return {cy.back_edge, parent_edge_[v]};
    return {s_.edge_index(v, cycle_child_.at({c, v})), parent_edge_[v]};
  }

  void build_plan(int v) {
    VertexPlan& plan = plans_[v];
    // interior paths and carried pairs at v
    std::vector<std::pair<int, std::pair<int, int>>> interior;  // (path, pair)
    for (int p = 0; p < s_.path_count(); ++p) {
      auto pr = interior_pair(p, v);
      if (pr.first >= 0) interior.emplace_back(p, pr);
    }
    std::set<int> engaged_set;
    for (const auto& [p, pr] : interior)
      for (int e : {pr.first, pr.second}) {
        int w = s_.edge_other(e, v);
        if (parent_[w] == v && parent_edge_[w] == e) engaged_set.insert(w);
      }
    for (int w : children_[v])
      if (cycle_at_[w] >= 0) engaged_set.insert(w);
    for (int w : children_[v]) {
      if (engaged_set.count(w))
        plan.engaged.push_back(w);
      else
        plan.disengaged.push_back(w);
    }

    std::map<std::pair<int, int>, int> pair_index;
    for (const auto& [p, pr] : interior) {
      auto key = std::minmax(pr.first, pr.second);
      auto [it, fresh] = pair_index.try_emplace(key, static_cast<int>(plan.pairs.size()));
      if (fresh) plan.pairs.push_back(key);
      (void)it;
    }
    if (plan.pairs.size() > 62) throw Error(Errc::TooLarge, "too many aligned pair options");
    plan.conflict.assign(plan.pairs.size(), 0);
    for (size_t i = 0; i < plan.pairs.size(); ++i)
      for (size_t j = 0; j < plan.pairs.size(); ++j) {
        if (i == j) continue;
        auto [a, b] = plan.pairs[i];
        auto [c, d] = plan.pairs[j];
        if (a == c || a == d || b == c || b == d) plan.conflict[i] |= uint64_t(1) << j;
      }

    // relevant paths: open below (engaged children) or interior here or open here
    std::set<int> relevant;
    for (size_t slot = 0; slot < plan.engaged.size(); ++slot)
      for (int p : open_list_[plan.engaged[slot]]) relevant.insert(p);
    for (const auto& [p, pr] : interior) relevant.insert(p);
    for (int p : open_list_[v]) relevant.insert(p);

    plan.key_size = static_cast<int>(open_list_[v].size());
    if (cycle_at_[v] >= 0) {
      plan.d_pos = plan.key_size;
      ++plan.key_size;
    }

    std::map<int, int> interior_pair_of;
    for (const auto& [p, pr] : interior)
      interior_pair_of[p] = pair_index.at(std::minmax(pr.first, pr.second));

    for (int p : relevant) {
      PathPlan pp;
      pp.path = p;
      for (size_t slot = 0; slot < plan.engaged.size(); ++slot) {
        auto it = open_pos_[plan.engaged[slot]].find(p);
        if (it != open_pos_[plan.engaged[slot]].end()) {
          if (pp.nsrc == 2) throw Error(Errc::BadInput, "path open in three children");
          pp.src[pp.nsrc].slot = static_cast<int>(slot);
          pp.src[pp.nsrc].pos = static_cast<int>(it->second);
          ++pp.nsrc;
        }
      }
      auto it = interior_pair_of.find(p);
      if (it != interior_pair_of.end()) pp.pair_idx = it->second;
      auto pos = open_pos_[v].find(p);
      pp.out_pos = pos == open_pos_[v].end() ? -1 : static_cast<int>(pos->second);
      plan.paths.push_back(pp);
    }

    // cycle bookkeeping
    auto pair_of_edges = [&](int e1, int e2) {
      auto it = pair_index.find(std::minmax(e1, e2));
      return it == pair_index.end() ? -1 : it->second;
    };
    auto slot_of_child = [&](int w) {
      auto it = std::find(plan.engaged.begin(), plan.engaged.end(), w);
      assert(it != plan.engaged.end());
      return static_cast<int>(it - plan.engaged.begin());
    };
    if (cycle_at_[v] >= 0) {
      int c = cycle_at_[v];
      CycleOp op;
      op.cycle = c;
      auto [e1, e2] = cycle_edges_at(c, v);
      op.pair_idx = pair_of_edges(e1, e2);
      if (arrival_[v] == c) {
        op.kind = CycleOp::Arrival;
      } else {
        op.kind = CycleOp::Middle;
        int w = cycle_child_.at({c, v});
        op.d_src.slot = slot_of_child(w);
        op.d_src.pos = static_cast<int>(open_list_[w].size());  // d sits after the open list
        if (cycle_at_[w] != c) throw Error(Errc::NotACactus, "broken cycle chain");
      }
      plan.cycle_ops.push_back(op);
    }
    for (int c : rooted_[v]) {
      CycleOp op;
      op.cycle = c;
      op.kind = CycleOp::Root;
      auto [e1, e2] = cycle_edges_at(c, v);
      op.pair_idx = pair_of_edges(e1, e2);
      int w = cycle_child_.at({c, v});
      op.d_src.slot = slot_of_child(w);
      op.d_src.pos = static_cast<int>(open_list_[w].size());
      if (cycle_at_[w] != c) throw Error(Errc::NotACactus, "broken cycle chain");
      plan.cycle_ops.push_back(op);
    }

    // planar data
    if (opt_.planar) {
      std::set<int> through;
      if (cycle_at_[v] >= 0) through.insert(cycle_at_[v]);
      for (int c : rooted_[v]) through.insert(c);
      plan.cycles_through.assign(through.begin(), through.end());
      plan.pair_cyc1.resize(plan.pairs.size());
      plan.pair_cyc2.resize(plan.pairs.size());
      plan.pair_cycle_self.assign(plan.pairs.size(), -1);
      std::map<std::pair<int, int>, int> cycle_pair;
      for (int c : plan.cycles_through) {
        auto [e1, e2] = cycle_edges_at(c, v);
        cycle_pair[std::minmax(e1, e2)] = c;
      }
      for (size_t i = 0; i < plan.pairs.size(); ++i) {
        plan.pair_cyc1[i] = edge_cycle_[plan.pairs[i].first];
        plan.pair_cyc2[i] = edge_cycle_[plan.pairs[i].second];
        auto it = cycle_pair.find(plan.pairs[i]);
        if (it != cycle_pair.end()) plan.pair_cycle_self[i] = it->second;
      }
    }
  }

  bool better(const Record& a, const Record& b) const {
    if (!opt_.lex) return a.curve < b.curve;
    size_t n = std::max(a.vec.size(), b.vec.size());
    for (size_t i = 0; i < n; ++i) {
      int x = i < a.vec.size() ? a.vec[i] : 0;
      int y = i < b.vec.size() ? b.vec[i] : 0;
      if (x != y) return x > y;
    }
    return false;
  }

  void process_vertex(int v) {
    build_plan(v);
    VertexPlan& plan = plans_[v];

    // fold disengaged children: best record independently
    int fold_curve = 0;
    std::vector<int> fold_vec(opt_.budget + 1, 0);
    for (int w : plan.disengaged) {
      const auto& recs = records_[w];
      if (recs.empty()) return;  // infeasible subtree, no records at v either
      int best = -1;
      int best_curve = 0;
      std::vector<int> best_vec;
      for (size_t i = 0; i < recs.size(); ++i) {
        if (!opt_.lex) {
          int val = recs[i].curve;
          for (size_t k = 0; k < open_list_[w].size(); ++k)
            val = std::max(val, static_cast<int>(recs[i].key[k]));
          if (best < 0 || val < best_curve) {
            best = static_cast<int>(i);
            best_curve = val;
          }
        } else {
          std::vector<int> val = recs[i].vec;
          for (size_t k = 0; k < open_list_[w].size(); ++k) ++val[recs[i].key[k]];
          bool take = best < 0;
          if (!take) {
            for (size_t t = 0; t < val.size(); ++t) {
              if (val[t] != best_vec[t]) {
                take = val[t] > best_vec[t];
                break;
              }
            }
          }
          if (take) {
            best = static_cast<int>(i);
            best_vec = val;
          }
        }
      }
      plan.disengaged_choice.emplace_back(w, best);
      if (!opt_.lex) {
        fold_curve = std::max(fold_curve, best_curve);
      } else {
        for (size_t t = 0; t < fold_vec.size(); ++t) fold_vec[t] += best_vec[t];
      }
    }

    for (int w : plan.engaged)
      if (records_[w].empty()) return;

    std::map<std::vector<int8_t>, int> dedup;
    auto& out = records_[v];

    // odometer over engaged child records
    size_t s = plan.engaged.size();
    std::vector<size_t> idx(s, 0);
    std::vector<const Record*> chosen(s, nullptr);
    while (true) {
      for (size_t i = 0; i < s; ++i) chosen[i] = &records_[plan.engaged[i]][idx[i]];
      // enumerate matchings of the carried pairs
      std::function<void(size_t, uint64_t, uint64_t)> enumerate = [&](size_t i, uint64_t mask,
                                                                      uint64_t blocked) {
        if (i == plan.pairs.size()) {
          evaluate(plan, chosen, mask, fold_curve, fold_vec, dedup, out);
          return;
        }
        enumerate(i + 1, mask, blocked);
        if (!(blocked >> i & 1)) enumerate(i + 1, mask | uint64_t(1) << i, blocked | plan.conflict[i]);
      };
      enumerate(0, 0, 0);
      // advance odometer
      size_t k = 0;
      while (k < s) {
        if (++idx[k] < records_[plan.engaged[k]].size()) break;
        idx[k] = 0;
        ++k;
      }
      if (k == s) break;
      if (s == 0) break;
    }

    // sanity: record count never exceeds (budget+1)^(open paths), times the
    // four cycle-counter states when one is live
    if (open_list_[v].size() < 24) {
      double bound = 1;
      for (size_t i = 0; i < open_list_[v].size(); ++i) bound *= opt_.budget + 1;
      bound *= cycle_at_[v] >= 0 ? 4 : 1;
      if (static_cast<double>(out.size()) > bound)
        throw Error(Errc::BadInput, "internal: record bound violated");
    }
  }

  void evaluate(const VertexPlan& plan, const std::vector<const Record*>& chosen,
                uint64_t mask, int fold_curve, const std::vector<int>& fold_vec,
                std::map<std::vector<int8_t>, int>& dedup, std::vector<Record>& out) {
    std::vector<int8_t> key(plan.key_size, 0);
    int completions_curve = 0;
    int open_max = 0;
    std::vector<int> completions;  // bend totals of completed paths
    for (const PathPlan& pp : plan.paths) {
      int total = 0;
      for (int t = 0; t < pp.nsrc; ++t) total += chosen[pp.src[t].slot]->key[pp.src[t].pos];
      if (pp.pair_idx >= 0 && !(mask >> pp.pair_idx & 1)) ++total;
      if (total > opt_.budget) return;
      if (pp.out_pos >= 0) {
        key[pp.out_pos] = static_cast<int8_t>(total);
        open_max = std::max(open_max, total);
      } else {
        completions.push_back(total);
        completions_curve = std::max(completions_curve, total);
      }
    }
    // cycle counters
    for (const CycleOp& op : plan.cycle_ops) {
      bool aligned = op.pair_idx >= 0 && (mask >> op.pair_idx & 1);
      if (op.kind == CycleOp::Arrival) {
        key[plan.d_pos] = aligned ? 0 : 1;
      } else {
        int d_child = chosen[op.d_src.slot]->key[op.d_src.pos];
        int d = std::min(3, d_child + (aligned ? 0 : 1));
        if (op.kind == CycleOp::Middle) {
          key[plan.d_pos] = static_cast<int8_t>(d);
        } else {
          if (d < 3) return;  // the closed cycle has fewer than three corners
        }
      }
    }
    if (opt_.planar && !planar_ok(plan, mask)) return;

    Record rec;
    rec.key = std::move(key);
    if (!opt_.lex) {
      rec.curve = std::max({fold_curve, completions_curve, open_max});
      for (const Record* r : chosen) rec.curve = std::max(rec.curve, r->curve);
    } else {
      rec.vec = fold_vec;
      for (const Record* r : chosen)
        for (size_t t = 0; t < r->vec.size(); ++t) rec.vec[t] += r->vec[t];
      for (int total : completions) ++rec.vec[total];
    }

    auto it = dedup.find(rec.key);
    if (it != dedup.end() && !better(rec, out[it->second])) return;

    for (size_t i = 0; i < plan.pairs.size(); ++i)
      if (mask >> i & 1) rec.pairs.push_back(plan.pairs[i]);
    for (size_t i = 0; i < plan.engaged.size(); ++i) {
      int child = plan.engaged[i];
      int index = static_cast<int>(chosen[i] - records_[child].data());
      rec.child_recs.emplace_back(child, index);
    }
    if (it != dedup.end()) {
      out[it->second] = std::move(rec);
    } else {
      dedup[rec.key] = static_cast<int>(out.size());
      out.push_back(std::move(rec));
    }
  }

  bool planar_ok(const VertexPlan& plan, uint64_t mask) const {
    int aligned_cycles = 0;
    for (size_t i = 0; i < plan.pairs.size(); ++i)
      if ((mask >> i & 1) && plan.pair_cycle_self[i] >= 0) ++aligned_cycles;
    if (aligned_cycles > 1) return false;
    if (aligned_cycles == 0) return true;
    std::map<int, std::vector<int>> h_adj;
    bool any = false;
    for (size_t i = 0; i < plan.pairs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      int c1 = plan.pair_cyc1[i], c2 = plan.pair_cyc2[i];
      if (c1 >= 0 && c2 >= 0 && c1 != c2) {
        h_adj[c1].push_back(c2);
        h_adj[c2].push_back(c1);
        any = true;
      }
    }
    if (!any) return true;
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
    return true;
  }

  void collect_alignment(int v, int rec_index, Alignment& out) const {
    const Record& rec = records_[v][rec_index];
    for (auto [e1, e2] : rec.pairs) out.add(e1, e2);
    for (auto [child, index] : rec.child_recs) collect_alignment(child, index, out);
    for (auto [child, index] : plans_[v].disengaged_choice) collect_alignment(child, index, out);
  }

  struct Cycle {
    int back_edge = -1;
    int t = -1, r = -1;
    std::vector<int> verts;  // t .. up .. r
  };

  const PathSupport& s_;
  DpOptions opt_;
  int root_ = 0;
  std::vector<int> parent_, parent_edge_, depth_;
  std::vector<std::vector<int>> children_;
  std::vector<int> post_order_;
  std::vector<Cycle> cycles_;
  std::vector<int> cycle_at_, arrival_;
  std::vector<std::vector<int>> rooted_;
  std::map<std::pair<int, int>, int> cycle_child_;
  std::vector<int> edge_cycle_;
  std::vector<std::vector<int>> open_list_;
  std::vector<std::map<int, size_t>> open_pos_;
  std::vector<std::vector<Record>> records_;
  std::vector<VertexPlan> plans_;
};

int max_interior(const PathSupport& s) {
  int cap = 0;
  for (const auto& p : s.paths()) cap = std::max(cap, p.interior_count());
  return cap;
}

DpResult dp_run(const PathSupport& s, DpOptions opt) {
  DpEngine engine(s, opt);
  DpResult r = engine.run();
  if (r.feasible) {
    // cross-check: the reconstructed alignment reproduces the reported value
    BendReport rep = count_bends(s, r.alignment);
    if (!opt.lex) {
      if (rep.curve != r.curve)
        throw Error(Errc::BadInput, "internal: reconstructed alignment mismatch");
    } else {
      BendVector expect;
      expect.counts.assign(r.vector.counts.begin(), r.vector.counts.end());
      if (compare_bend_vectors(rep.vector, expect) != 0)
        throw Error(Errc::BadInput, "internal: reconstructed vector mismatch");
    }
  }
  return r;
}

void require_tree(const PathSupport& s) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "operation requires a tree support");
}

void require_cactus(const PathSupport& s) {
  if (!is_cactus(s)) throw Error(Errc::NotACactus, "operation requires a cactus support");
}

}  // namespace

DpResult dp_curve_complexity(const PathSupport& s, int budget) {
  require_tree(s);
  if (budget < 0) throw Error(Errc::BadInput, "budget must be non-negative");
  return dp_run(s, DpOptions{budget, false, false});
}

DpResult dp_curve_complexity_opt(const PathSupport& s) {
  require_tree(s);
  int cap = max_interior(s);
  for (int b = 0; b <= cap; ++b) {
    DpResult r = dp_run(s, DpOptions{b, false, false});
    if (r.feasible) return r;
  }
  return {};
}

DpResult dp_lex_bend_vector(const PathSupport& s, std::optional<int> cap) {
  require_tree(s);
  int budget = cap.value_or(max_interior(s));
  DpResult r = dp_run(s, DpOptions{budget, true, false});
  if (!r.feasible) throw Error(Errc::Infeasible, "some path cannot meet the per-path cap");
  return r;
}

DpResult dp_cactus_curve(const PathSupport& s, int budget, bool planar) {
  require_cactus(s);
  if (budget < 0) throw Error(Errc::BadInput, "budget must be non-negative");
  return dp_run(s, DpOptions{budget, false, planar});
}

DpResult dp_cactus_curve_opt(const PathSupport& s, bool planar) {
  require_cactus(s);
  int cap = max_interior(s);
  for (int b = 0; b <= cap; ++b) {
    DpResult r = dp_run(s, DpOptions{b, false, planar});
    if (r.feasible) return r;
  }
  return {};
}

DpResult dp_cactus_lex(const PathSupport& s, std::optional<int> cap, bool planar) {
  require_cactus(s);
  int budget = cap.value_or(max_interior(s));
  DpResult r = dp_run(s, DpOptions{budget, true, planar});
  if (!r.feasible) throw Error(Errc::Infeasible, "some path cannot meet the per-path cap");
  return r;
}

// ---------- kernels ----------

KernelResult kernel_by_path_count(const PathSupport& s) {
  require_tree(s);
  // mutable copies
  std::vector<std::string> names;
  for (int v = 0; v < s.vertex_count(); ++v) names.push_back(s.vertex_name(v));
  std::set<std::pair<int, int>> edges(s.edges().begin(), s.edges().end());
  std::vector<std::vector<int>> paths;
  std::vector<std::string> path_ids;
  for (const auto& p : s.paths()) {
    paths.push_back(p.verts);
    path_ids.push_back(p.id);
  }
  std::set<int> removed;

  auto degree_of = [&](int v) {
    int d = 0;
    for (const auto& [a, b] : edges)
      if (a == v || b == v) ++d;
    return d;
  };
  auto neighbors_of = [&](int v) {
    std::vector<int> nb;
    for (const auto& [a, b] : edges) {
      if (a == v) nb.push_back(b);
      if (b == v) nb.push_back(a);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
  };

  while (true) {
    int v = -1;
    for (int x = 0; x < s.vertex_count(); ++x)
      if (!removed.count(x) && degree_of(x) == 2) {
        v = x;
        break;
      }
    if (v < 0) break;
    auto nb = neighbors_of(v);
    int a = nb[0], b = nb[1];
    edges.erase(std::minmax(a, v));
    edges.erase(std::minmax(b, v));
    edges.insert(std::minmax(a, b));
    removed.insert(v);
    for (auto& path : paths) {
      auto it = std::find(path.begin(), path.end(), v);
      if (it == path.end()) continue;
      if (it != path.begin() && it + 1 != path.end()) {
        path.erase(it);  // passes through: contract
      } else if (path.size() == 1) {
        continue;  // cannot happen: paths have >= 2 vertices
      } else {
        // ends at v: extend to the neighbor it does not come from
        int from = it == path.begin() ? *(it + 1) : *(it - 1);
        int other = from == a ? b : a;
        *it = other;
      }
    }
  }

  // compact vertex set
  std::map<int, int> remap;
  std::vector<std::string> kept_names;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (!removed.count(v)) {
      remap[v] = static_cast<int>(kept_names.size());
      kept_names.push_back(names[v]);
    }
  std::vector<std::pair<int, int>> kept_edges;
  for (auto [a, b] : edges) kept_edges.emplace_back(remap.at(a), remap.at(b));
  std::vector<Path> kept_paths;
  KernelResult result{PathSupport{}, {}, {}};
  for (size_t k = 0; k < paths.size(); ++k) {
    Path p;
    p.id = path_ids[k];
    for (int v : paths[k]) p.verts.push_back(remap.at(v));
    kept_paths.push_back(std::move(p));
    result.path_provenance[path_ids[k]] = path_ids[k];
  }
  for (int v : removed) result.removed_vertices.push_back(names[v]);
  result.reduced =
      PathSupport::from_indexed(std::move(kept_names), std::move(kept_edges), std::move(kept_paths));
  return result;
}

std::vector<int> min_vertex_cover_tree(const PathSupport& s) {
  if (!is_tree(s)) throw Error(Errc::NotATree, "vertex cover routine requires a tree");
  int n = s.vertex_count();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> alive(s.edges().begin(), s.edges().end());
  for (int v = 0; v < n; ++v) deg[v] = s.degree(v);
  std::vector<int> cover;
  std::set<int> in_cover;
  while (!alive.empty()) {
    // smallest-id leaf of the remaining forest
    int leaf = -1;
    for (int v = 0; v < n && leaf < 0; ++v) {
      if (in_cover.count(v)) continue;
      int d = 0;
      for (const auto& [a, b] : alive)
        if (a == v || b == v) ++d;
      if (d == 1) leaf = v;
    }
    if (leaf < 0) break;
    int u = -1;
    for (const auto& [a, b] : alive) {
      if (a == leaf) u = b;
      if (b == leaf) u = a;
    }
    cover.push_back(u);
    in_cover.insert(u);
    for (auto it = alive.begin(); it != alive.end();) {
      if (it->first == u || it->second == u)
        it = alive.erase(it);
      else
        ++it;
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

int leaf_stripped_vertex_count(const PathSupport& s) {
  int cnt = 0;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) >= 2) ++cnt;
  return cnt;
}

KernelResult kernel_by_vertex_cover(const PathSupport& s) {
  require_tree(s);
  KernelResult result{s, {}, {}};
  for (const auto& p : s.paths()) result.path_provenance[p.id] = p.id;
  if (s.vertex_count() <= 2) return result;

  auto is_leaf = [&](int v) { return s.degree(v) == 1; };

  // group paths by their subpath in the leaf-stripped tree
  struct Group {
    std::vector<int> pi;          // canonical inner vertex sequence
    int v = -1, vp = -1;          // endpoints of pi
    std::vector<int> p0, p1, p2;  // member paths by number of leaf endpoints
  };
  std::map<std::vector<int>, int> group_index;
  std::vector<Group> groups;
  // v-side leaf end of a P2/P1 path: the stripped endpoint adjacent to pi's
  // first inner vertex
  auto inner_of = [&](const Path& p) {
    std::vector<int> inner = p.verts;
    bool front = is_leaf(inner.front());
    bool back = is_leaf(inner.back());
    if (front) inner.erase(inner.begin());
    if (back) inner.pop_back();
    return inner;
  };

  for (int pid = 0; pid < s.path_count(); ++pid) {
    const Path& p = s.path(pid);
    std::vector<int> inner = inner_of(p);
    if (inner.empty()) throw Error(Errc::BadInput, "internal: empty stripped path");
    std::vector<int> rev(inner.rbegin(), inner.rend());
    std::vector<int> key = std::min(inner, rev);
    auto [it, fresh] = group_index.try_emplace(key, static_cast<int>(groups.size()));
    if (fresh) {
      Group g;
      g.pi = key;
      g.v = key.front();
      g.vp = key.back();
      groups.push_back(std::move(g));
    }
    Group& g = groups[it->second];
    int leaf_count = (is_leaf(p.verts.front()) ? 1 : 0) + (is_leaf(p.verts.back()) ? 1 : 0);
    (leaf_count == 0 ? g.p0 : leaf_count == 1 ? g.p1 : g.p2).push_back(pid);
  }

  // per path: its stripped leaf ends as (leaf, inner neighbor) pairs
  auto path_leaf_ends = [&](int pid) {
    const Path& p = s.path(pid);
    std::vector<std::pair<int, int>> ends;
    if (is_leaf(p.verts.front())) ends.emplace_back(p.verts.front(), p.verts[1]);
    if (is_leaf(p.verts.back()))
      ends.emplace_back(p.verts.back(), p.verts[p.verts.size() - 2]);
    return ends;
  };
  // leaf ends of the path adjacent to the given group endpoint
  auto ends_at = [&](int pid, int group_end) {
    std::vector<int> out;
    for (auto [leaf, nb] : path_leaf_ends(pid))
      if (nb == group_end) out.push_back(leaf);
    return out;
  };

  std::set<int> retained;
  for (Group& g : groups) {
    // L_v, L_v': leaves hosting a P2 end on each side
    auto side_ends = [&](int end) {
      std::map<int, std::vector<int>> by_leaf;  // leaf -> paths ending there
      for (int pid : g.p2)
        for (int leaf : ends_at(pid, end)) by_leaf[leaf].push_back(pid);
      return by_leaf;
    };
    auto lv = side_ends(g.v);
    auto lvp = side_ends(g.vp);
    if (lv.size() > lvp.size()) {
      std::swap(g.v, g.vp);
      std::swap(lv, lvp);
    }

    if (g.p1.empty() && g.p2.empty()) {  // (a)
      if (!g.p0.empty()) retained.insert(*std::min_element(g.p0.begin(), g.p0.end()));
      continue;
    }
    // one-leaf paths: up to two per side, preferring distinct leaves; without
    // them a pair of retained two-leaf paths with identical endpoints would
    // lose the bend forced by a dropped one-leaf path
    {
      for (int end : {g.v, g.vp}) {
        int taken = 0;
        std::set<int> used_leaves;
        for (int round = 0; round < 2 && taken < 2; ++round)
          for (int pid : g.p1) {
            if (taken >= 2) break;
            if (retained.count(pid)) continue;
            auto leaves = ends_at(pid, end);
            if (leaves.empty()) continue;
            if (round == 0 && used_leaves.count(leaves.front())) continue;
            retained.insert(pid);
            used_leaves.insert(leaves.front());
            ++taken;
          }
        if (g.v == g.vp) break;
      }
    }
    if (g.p2.size() <= 1) {  // (b)
      if (!g.p2.empty()) retained.insert(g.p2.front());
      continue;
    }
    // up to two paths from one near-side leaf, preferring distinct far-side
    // endpoints: keeping two copies with identical endpoints would lose the
    // bend forced at the far end by a dropped path
    auto far_end_of = [&](int pid, int near_leaf) {
      for (auto [leaf, nb] : path_leaf_ends(pid))
        if (leaf != near_leaf) return leaf;
      return -1;
    };
    auto pick_two_diverse = [&](const std::vector<int>& pids, int near_leaf) {
      std::vector<int> out;
      std::set<int> fars;
      for (int pid : pids) {
        if (out.size() >= 2) break;
        int far = far_end_of(pid, near_leaf);
        if (fars.insert(far).second) out.push_back(pid);
      }
      for (int pid : pids) {
        if (out.size() >= 2) break;
        if (std::find(out.begin(), out.end(), pid) == out.end()) out.push_back(pid);
      }
      return out;
    };

    if (lv.size() <= 3) {  // (c)
      for (const auto& [leaf, pids] : lv)
        for (int pid : pick_two_diverse(pids, leaf)) retained.insert(pid);
      continue;
    }
    // (d): two vertices on the v side where at least two paths end each
    {
      std::vector<int> multi_v, multi_vp;
      for (const auto& [leaf, pids] : lv)
        if (pids.size() >= 2) multi_v.push_back(leaf);
      for (const auto& [leaf, pids] : lvp)
        if (pids.size() >= 2) multi_vp.push_back(leaf);
      if (multi_v.size() >= 2) {
        for (int t = 0; t < 2; ++t)
          for (int pid : pick_two_diverse(lv[multi_v[t]], multi_v[t])) retained.insert(pid);
        if (multi_vp.size() >= 2)
          for (int t = 0; t < 2; ++t)
            for (int pid : pick_two_diverse(lvp[multi_vp[t]], multi_vp[t])) retained.insert(pid);
        continue;
      }
    }
    // (e): three vertex-disjoint u_i - u'_i paths in P2
    {
      std::map<int, int> node_of;
      auto node = [&](int leaf) {
        auto [it, fresh] = node_of.try_emplace(leaf, static_cast<int>(node_of.size()));
        (void)fresh;
        return it->second;
      };
      std::vector<std::tuple<int, int, int>> cand;  // (node1, node2, pid)
      for (int pid : g.p2) {
        auto ends = path_leaf_ends(pid);
        if (ends.size() != 2) continue;
        int a = -1, c = -1;
        if (g.v != g.vp) {
          for (auto [leaf, nb] : ends) {
            if (nb == g.v) a = leaf;
            if (nb == g.vp) c = leaf;
          }
        } else {
          a = ends[0].first;
          c = ends[1].first;
        }
        if (a >= 0 && c >= 0 && a != c) cand.emplace_back(node(a), node(c), pid);
      }
      int nn = static_cast<int>(node_of.size());
      std::vector<std::vector<long long>> w(nn, std::vector<long long>(nn, 0));
      std::map<std::pair<int, int>, int> pid_of;
      for (auto [a, c, pid] : cand) {
        auto key = std::minmax(a, c);
        if (!pid_of.count(key)) {
          pid_of[key] = pid;
          w[key.first][key.second] = w[key.second][key.first] = 1;
        }
      }
      MatchingResult m = nn ? max_weight_matching_lex(w) : MatchingResult{};
      if (m.pairs.size() >= 3) {
        for (int t = 0; t < 3; ++t)
          retained.insert(pid_of.at({m.pairs[t].first, m.pairs[t].second}));
        continue;
      }
    }
    // (f): at most one heavy leaf per side
    {
      auto pick = [&](std::map<int, std::vector<int>>& side) {
        int u = -1;
        for (const auto& [leaf, pids] : side)
          if (pids.size() >= 2) {
            u = leaf;
            break;
          }
        if (u < 0 && !side.empty()) u = side.begin()->first;
        return u;
      };
      int u = pick(lv), up = pick(lvp);
      if (u >= 0)
        for (int pid : pick_two_diverse(lv[u], u)) retained.insert(pid);
      if (up >= 0 && up != u)
        for (int pid : pick_two_diverse(lvp[up], up)) retained.insert(pid);
      for (int pid : g.p2) {
        bool touches = false;
        for (auto [leaf, nb] : path_leaf_ends(pid))
          if (leaf == u || leaf == up) touches = true;
        if (!touches) {
          retained.insert(pid);
          break;
        }
      }
    }
  }

  // drop leaves where no retained path ends
  std::set<int> keep_vertices;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (!is_leaf(v)) keep_vertices.insert(v);
  for (int pid : retained) {
    const Path& p = s.path(pid);
    keep_vertices.insert(p.verts.front());
    keep_vertices.insert(p.verts.back());
  }
  std::map<int, int> remap;
  std::vector<std::string> names;
  for (int v : keep_vertices) {
    remap[v] = static_cast<int>(names.size());
    names.push_back(s.vertex_name(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [a, b] = s.edge(e);
    if (keep_vertices.count(a) && keep_vertices.count(b)) edges.emplace_back(remap[a], remap[b]);
  }
  std::vector<Path> paths;
  KernelResult out{PathSupport{}, {}, {}};
  for (int pid : retained) {
    const Path& p = s.path(pid);
    Path q;
    q.id = p.id;
    for (int v : p.verts) q.verts.push_back(remap.at(v));
    paths.push_back(std::move(q));
    out.path_provenance[p.id] = p.id;
  }
  for (int v = 0; v < s.vertex_count(); ++v)
    if (!keep_vertices.count(v)) out.removed_vertices.push_back(s.vertex_name(v));
  out.reduced = PathSupport::from_indexed(std::move(names), std::move(edges), std::move(paths));
  return out;
}

}  // namespace bendix
