#include "bendix/twosat.hpp"

#include <algorithm>

namespace bendix {

TwoSat::TwoSat(int variables) : n_(variables), impl_(2 * variables) {}

void TwoSat::add_clause(int a, bool a_true, int b, bool b_true) {
  int la = 2 * a + (a_true ? 0 : 1);
  int lb = 2 * b + (b_true ? 0 : 1);
  impl_[la ^ 1].push_back(lb);  // !A -> B
  impl_[lb ^ 1].push_back(la);  // !B -> A
}

std::optional<std::vector<bool>> TwoSat::solve() const {
  int n2 = 2 * n_;
  std::vector<int> comp(n2, -1), low(n2, 0), num(n2, -1), stck;
  stck.reserve(n2);
  int counter = 0, comps = 0;

  // iterative Tarjan
  struct Frame {
    int v;
    size_t next;
  };
  std::vector<Frame> frames;
  std::vector<char> on_stack(n2, 0);
  for (int s = 0; s < n2; ++s) {
    if (num[s] >= 0) continue;
    frames.push_back({s, 0});
    num[s] = low[s] = counter++;
    stck.push_back(s);
    on_stack[s] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < impl_[f.v].size()) {
        int w = impl_[f.v][f.next++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stck.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == num[v]) {
          while (true) {
            int w = stck.back();
            stck.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
      }
    }
  }

  std::vector<bool> values(n_);
  for (int x = 0; x < n_; ++x) {
    if (comp[2 * x] == comp[2 * x + 1]) return std::nullopt;
    // Tarjan numbers components in reverse topological order; the literal
    // whose component comes earlier (closer to a sink) is set true.
    values[x] = comp[2 * x] < comp[2 * x + 1];
  }
  return values;
}

}  // namespace bendix
