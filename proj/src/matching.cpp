#include "bendix/matching.hpp"

#include <algorithm>
#include <deque>

namespace bendix {

namespace {

// Primal-dual blossom algorithm, O(n^3). Internally 1-indexed; node ids
// above n denote contracted blossoms. Edges of weight 0 are treated as
// absent, which makes the result a maximum-weight (not necessarily
// perfect) matching.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<long long>>& w) {
    n = static_cast<int>(w.size());
    int cap = 2 * n + 1;
    g.assign(cap, std::vector<Edge>(cap));
    for (int u = 1; u < cap; ++u)
      for (int v = 1; v < cap; ++v) g[u][v] = Edge{u, v, 0};
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) g[u][v].w = (u == v) ? 0 : w[u - 1][v - 1];
    lab.assign(cap, 0);
    match.assign(cap, 0);
    slack.assign(cap, 0);
    st.assign(cap, 0);
    pa.assign(cap, 0);
    S.assign(cap, -1);
    vis.assign(cap, 0);
    flower.assign(cap, {});
    flower_from.assign(cap, std::vector<int>(n + 1, 0));
  }

  MatchingResult solve() {
    n_x = n;
    for (int u = 0; u <= n; ++u) st[u] = u;
    long long w_max = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        flower_from[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, g[u][v].w);
      }
    for (int u = 1; u <= n; ++u) lab[u] = w_max;
    while (run_phase()) {
    }
    MatchingResult result;
    for (int u = 1; u <= n; ++u)
      if (match[u] && match[u] < u && g[u][match[u]].w > 0) {
        result.weight += g[u][match[u]].w;
        result.pairs.emplace_back(match[u] - 1, u - 1);
      }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
  }

 private:
  struct Edge {
    int u = 0, v = 0;
    long long w = 0;
  };
  static constexpr long long kInf = (long long)4e18;

  int n = 0, n_x = 0;
  std::vector<std::vector<Edge>> g;
  std::vector<long long> lab;
  std::vector<int> match, slack, st, pa, S, vis;
  std::vector<std::vector<int>> flower;
  std::vector<std::vector<int>> flower_from;
  std::deque<int> q;

  long long e_delta(const Edge& e) const { return lab[e.u] + lab[e.v] - g[e.u][e.v].w * 2; }

  void update_slack(int u, int x) {
    if (!slack[x] || e_delta(g[u][x]) < e_delta(g[slack[x]][x])) slack[x] = u;
  }

  void set_slack(int x) {
    slack[x] = 0;
    for (int u = 1; u <= n; ++u)
      if (g[u][x].w > 0 && st[u] != x && S[st[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n) {
      q.push_back(x);
    } else {
      for (int i : flower[x]) q_push(i);
    }
  }

  void set_st(int x, int b) {
    st[x] = b;
    if (x > n)
      for (int i : flower[x]) set_st(i, b);
  }

  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower[b].begin(), flower[b].end(), xr) -
                              flower[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower[b].begin() + 1, flower[b].end());
      return static_cast<int>(flower[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match[u] = g[u][v].v;
    if (u > n) {
      const Edge& e = g[u][v];
      int xr = flower_from[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i) set_match(flower[u][i], flower[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
    }
  }

  void augment(int u, int v) {
    while (true) {
      int xnv = st[match[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st[pa[xnv]]);
      v = xnv;
      u = st[pa[xnv]];
    }
  }

  int get_lca(int u, int v) {
    ++timer;
    while (u || v) {
      if (u) {
        if (vis[u] == timer) return u;
        vis[u] = timer;
        u = st[match[u]];
        if (u) u = st[pa[u]];
      }
      std::swap(u, v);
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n + 1;
    while (b <= n_x && st[b]) ++b;
    if (b > n_x) ++n_x;
    lab[b] = 0;
    S[b] = 0;
    match[b] = match[lca];
    flower[b].clear();
    flower[b].push_back(lca);
    for (int x = u, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    std::reverse(flower[b].begin() + 1, flower[b].end());
    for (int x = v, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x; ++x) g[b][x].w = g[x][b].w = 0;
    for (int x = 1; x <= n; ++x) flower_from[b][x] = 0;
    for (int xs : flower[b]) {
      for (int x = 1; x <= n_x; ++x)
        if (g[b][x].w == 0 || e_delta(g[xs][x]) < e_delta(g[b][x])) {
          g[b][x] = g[xs][x];
          g[x][b] = g[x][xs];
        }
      for (int x = 1; x <= n; ++x)
        if (flower_from[xs][x]) flower_from[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int i : flower[b]) set_st(i, i);
    int xr = flower_from[b][g[b][pa[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower[b][i];
      int xns = flower[b][i + 1];
      pa[xs] = g[xns][xs].u;
      S[xs] = 1;
      S[xns] = 0;
      slack[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    S[xr] = 1;
    pa[xr] = pa[b];
    for (int i = pr + 1; i < static_cast<int>(flower[b].size()); ++i) {
      int xs = flower[b][i];
      S[xs] = -1;
      set_slack(xs);
    }
    st[b] = 0;
  }

  bool on_found_edge(const Edge& e) {
    int u = st[e.u], v = st[e.v];
    if (S[v] == -1) {
      pa[v] = e.u;
      S[v] = 1;
      int nu = st[match[v]];
      slack[v] = slack[nu] = 0;
      S[nu] = 0;
      q_push(nu);
    } else if (S[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool run_phase() {
    std::fill(S.begin() + 1, S.begin() + n_x + 1, -1);
    std::fill(slack.begin() + 1, slack.begin() + n_x + 1, 0);
    q.clear();
    for (int x = 1; x <= n_x; ++x)
      if (st[x] == x && !match[x]) {
        pa[x] = 0;
        S[x] = 0;
        q_push(x);
      }
    if (q.empty()) return false;
    while (true) {
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (S[st[u]] == 1) continue;
        for (int v = 1; v <= n; ++v)
          if (g[u][v].w > 0 && st[u] != st[v]) {
            if (e_delta(g[u][v]) == 0) {
              if (on_found_edge(g[u][v])) return true;
            } else {
              update_slack(u, st[v]);
            }
          }
      }
      long long d = kInf;
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1) d = std::min(d, lab[b] / 2);
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x]) {
          if (S[x] == -1)
            d = std::min(d, e_delta(g[slack[x]][x]));
          else if (S[x] == 0)
            d = std::min(d, e_delta(g[slack[x]][x]) / 2);
        }
      for (int u = 1; u <= n; ++u) {
        if (S[st[u]] == 0) {
          if (lab[u] <= d) return false;
          lab[u] -= d;
        } else if (S[st[u]] == 1) {
          lab[u] += d;
        }
      }
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b) {
          if (S[b] == 0)
            lab[b] += d * 2;
          else if (S[b] == 1)
            lab[b] -= d * 2;
        }
      q.clear();
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x] && st[slack[x]] != x && e_delta(g[slack[x]][x]) == 0)
          if (on_found_edge(g[slack[x]][x])) return true;
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1 && lab[b] == 0) expand_blossom(b);
    }
  }

  int timer = 0;
};

}  // namespace

MatchingResult max_weight_matching(const std::vector<std::vector<long long>>& weights) {
  if (weights.empty()) return {};
  Blossom solver(weights);
  return solver.solve();
}

MatchingResult max_weight_matching_lex(const std::vector<std::vector<long long>>& weights,
                                       int lex_threshold) {
  MatchingResult base = max_weight_matching(weights);
  int n = static_cast<int>(weights.size());
  if (n > lex_threshold) return base;
  const long long target = base.weight;

  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (weights[i][j] > 0) candidates.emplace_back(i, j);

  // Max weight over matchings restricted to candidate pairs strictly after
  // position `from` avoiding `used` nodes.
  auto rest_weight = [&](size_t from, const std::vector<char>& used) {
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (size_t k = from; k < candidates.size(); ++k) {
      auto [i, j] = candidates[k];
      if (!used[i] && !used[j]) w[i][j] = w[j][i] = weights[i][j];
    }
    return max_weight_matching(w).weight;
  };

  MatchingResult result;
  std::vector<char> used(n, 0);
  size_t pos = 0;
  while (result.weight < target) {
    bool fixed = false;
    for (size_t k = pos; k < candidates.size(); ++k) {
      auto [i, j] = candidates[k];
      if (used[i] || used[j]) continue;
      std::vector<char> next_used = used;
      next_used[i] = next_used[j] = 1;
      if (result.weight + weights[i][j] + rest_weight(k + 1, next_used) == target) {
        result.pairs.emplace_back(i, j);
        result.weight += weights[i][j];
        used = next_used;
        pos = k + 1;
        fixed = true;
        break;
      }
    }
    if (!fixed) return base;  // should not happen; fall back defensively
  }
  return result;
}

}  // namespace bendix
