#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bendix {

// Exact maximum-weight matching on a small dense general graph.
// Nodes are 0..n-1; weights[i][j] >= 0; zero-weight pairs never enter the
// matching. Returns the matched pairs (i < j) sorted.
struct MatchingResult {
  long long weight = 0;
  std::vector<std::pair<int, int>> pairs;
};

MatchingResult max_weight_matching(const std::vector<std::vector<long long>>& weights);

// Among all maximum-weight matchings, the one whose sorted pair sequence is
// lexicographically smallest. Quadratically many solver calls, so intended
// for small node counts; above the threshold the plain solver result is
// returned (still deterministic).
MatchingResult max_weight_matching_lex(const std::vector<std::vector<long long>>& weights,
                                       int lex_threshold = 14);

}  // namespace bendix
