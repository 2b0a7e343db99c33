#include <functional>
#include <random>
#include <tuple>

#include "bendix/matching.hpp"
#include "doctest.h"

using namespace bendix;

namespace {

// Independent oracle: exhaustive subset-style search over all matchings.
long long brute_best_weight(const std::vector<std::vector<long long>>& w) {
  int n = static_cast<int>(w.size());
  long long best = 0;
  std::vector<int> mate(n, -1);
  std::function<void(int, long long)> rec = [&](int i, long long acc) {
    if (i == n) {
      best = std::max(best, acc);
      return;
    }
    if (mate[i] >= 0) {
      rec(i + 1, acc);
      return;
    }
    rec(i + 1, acc);  // leave i unmatched
    for (int j = i + 1; j < n; ++j)
      if (mate[j] < 0 && w[i][j] > 0) {
        mate[i] = j;
        mate[j] = i;
        rec(i + 1, acc + w[i][j]);
        mate[i] = mate[j] = -1;
      }
  };
  rec(0, 0);
  return best;
}

std::vector<std::vector<long long>> matrix(int n, std::vector<std::tuple<int, int, long long>> es) {
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (auto [a, b, x] : es) w[a][b] = w[b][a] = x;
  return w;
}

}  // namespace

TEST_CASE("triangle with two equally good pairs") {
  // weights {ab:1, ac:1, bc:0} -> weight 1, lex-smallest picks {ab}
  auto w = matrix(3, {{0, 1, 1}, {0, 2, 1}});
  auto m = max_weight_matching_lex(w);
  CHECK(m.weight == 1);
  REQUIRE(m.pairs.size() == 1);
  CHECK(m.pairs[0] == std::pair<int, int>(0, 1));
}

TEST_CASE("all-zero weights give an empty matching") {
  auto w = matrix(3, {});
  auto m = max_weight_matching_lex(w);
  CHECK(m.weight == 0);
  CHECK(m.pairs.empty());
}

TEST_CASE("K4 instance from enumerating the ten matchings") {
  // weights {ab:2, cd:3, ac:4} -> {ab, cd} with weight 5
  auto w = matrix(4, {{0, 1, 2}, {2, 3, 3}, {0, 2, 4}});
  auto m = max_weight_matching_lex(w);
  CHECK(m.weight == 5);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("blossom handling on an odd cycle") {
  // C5 with unit weights: maximum matching has 2 edges
  auto w = matrix(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
  auto m = max_weight_matching(w);
  CHECK(m.weight == 2);
}

TEST_CASE("matching equals the exhaustive optimum on random graphs") {
  std::mt19937_64 rng(20250808);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long long x = rng() % 8;  // includes zeros = absent edges
        w[i][j] = w[j][i] = x;
      }
    long long expect = brute_best_weight(w);
    auto got = max_weight_matching(w);
    CAPTURE(iter);
    CHECK(got.weight == expect);
    // matched pairs must be disjoint
    std::vector<int> used(n, 0);
    long long sum = 0;
    for (auto [a, b] : got.pairs) {
      CHECK(!used[a]);
      CHECK(!used[b]);
      used[a] = used[b] = 1;
      sum += w[a][b];
    }
    CHECK(sum == got.weight);

    auto lex = max_weight_matching_lex(w);
    CHECK(lex.weight == expect);
  }
}

TEST_CASE("lex refinement returns the smallest optimal pair sequence") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = rng() % 3;
    long long best = brute_best_weight(w);
    // exhaustively find the lexicographically smallest optimal matching
    std::vector<std::pair<int, int>> best_seq;
    bool have = false;
    std::vector<int> mate(n, -1);
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, long long)> rec = [&](int i, long long acc) {
      if (i == n) {
        if (acc == best) {
          if (!have || cur < best_seq) {
            best_seq = cur;
            have = true;
          }
        }
        return;
      }
      if (mate[i] >= 0) {
        rec(i + 1, acc);
        return;
      }
      rec(i + 1, acc);
      for (int j = i + 1; j < n; ++j)
        if (mate[j] < 0 && w[i][j] > 0) {
          mate[i] = j;
          mate[j] = i;
          cur.emplace_back(i, j);
          rec(i + 1, acc + w[i][j]);
          cur.pop_back();
          mate[i] = mate[j] = -1;
        }
    };
    rec(0, 0);
    std::sort(best_seq.begin(), best_seq.end());
    auto got = max_weight_matching_lex(w);
    CAPTURE(iter);
    CHECK(got.pairs == best_seq);
  }
}
