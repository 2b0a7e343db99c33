#pragma once

#include <optional>
#include <vector>

namespace bendix {

// 2-SAT over variables 0..n-1 via strongly connected components of the
// implication graph. Literals: +x for variable x true, encoded internally.
class TwoSat {
 public:
  explicit TwoSat(int variables);

  // clause (a_true ? a : !a) OR (b_true ? b : !b)
  void add_clause(int a, bool a_true, int b, bool b_true);
  void add_unit(int a, bool a_true) { add_clause(a, a_true, a, a_true); }

  // Satisfying assignment extracted from the reverse topological order of
  // the condensation, or nullopt if unsatisfiable.
  std::optional<std::vector<bool>> solve() const;

 private:
  int n_;
  std::vector<std::vector<int>> impl_;  // 2n nodes: 2x = x true, 2x+1 = x false
};

}  // namespace bendix
