#include <random>

#include "bendix/bench.hpp"
#include "bendix/fpt.hpp"
#include "bendix/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bendix;
using testutil::make_support;

TEST_CASE("record DP on the two-path star") {
  auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
  CHECK(!dp_curve_complexity(s, 0).feasible);
  auto r = dp_curve_complexity(s, 1);
  REQUIRE(r.feasible);
  CHECK(r.curve == 1);
  CHECK(count_bends(s, r.alignment).curve == 1);
}

TEST_CASE("record DP on complete binary trees") {
  SUBCASE("height 3: feasible at b=2, infeasible below") {
    auto s = gen_complete_binary_tree(3);
    CHECK(!dp_curve_complexity(s, 0).feasible);
    CHECK(!dp_curve_complexity(s, 1).feasible);
    auto r = dp_curve_complexity(s, 2);
    REQUIRE(r.feasible);
    CHECK(r.curve == 2);
  }
  SUBCASE("height 2 optimum is 1") {
    auto s = gen_complete_binary_tree(2);
    auto r = dp_curve_complexity_opt(s);
    REQUIRE(r.feasible);
    CHECK(r.curve == 1);
  }
}

TEST_CASE("lexicographic DP examples") {
  SUBCASE("two-path star gives (1,1)") {
    auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
    auto r = dp_lex_bend_vector(s, 1);
    REQUIRE(r.feasible);
    CHECK(r.vector.counts == std::vector<long long>{1, 1});
  }
  SUBCASE("single path gives (1)") {
    auto s = make_support({{"a", "b", "c"}});
    auto r = dp_lex_bend_vector(s);
    REQUIRE(r.feasible);
    CHECK(r.vector.counts == std::vector<long long>{1});
  }
  SUBCASE("complete binary tree height 2 gives (2,2)") {
    auto s = gen_complete_binary_tree(2);
    auto r = dp_lex_bend_vector(s, 1);
    REQUIRE(r.feasible);
    CHECK(r.vector.counts == std::vector<long long>{2, 2});
  }
}

TEST_CASE("DP agrees with the oracle on random trees") {
  std::mt19937_64 rng(2025);
  for (int iter = 0; iter < 80; ++iter) {
    auto s = gen_random_tree_support(rng());
    CAPTURE(iter);
    auto oracle_curve = oracle_solve(s, OracleObjective::Curve);
    REQUIRE(oracle_curve.feasible);
    auto dp = dp_curve_complexity_opt(s);
    REQUIRE(dp.feasible);
    CHECK(dp.curve == oracle_curve.curve);
    for (int b = 0; b <= 4; ++b) {
      auto r = dp_curve_complexity(s, b);
      CHECK(r.feasible == (oracle_curve.curve <= b));
      if (r.feasible) CHECK(r.curve == oracle_curve.curve);
    }
    auto oracle_lex = oracle_solve(s, OracleObjective::LexVector);
    auto lex = dp_lex_bend_vector(s);
    REQUIRE(lex.feasible);
    CHECK(compare_bend_vectors(lex.vector, oracle_lex.vector) == 0);
  }
}

TEST_CASE("cactus DP examples") {
  SUBCASE("triangle of single-edge paths is drawable with zero bends") {
    auto s = make_support({{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
    auto r = dp_cactus_curve(s, 0, false);
    REQUIRE(r.feasible);
    CHECK(r.curve == 0);
  }
  SUBCASE("comb cactus n=5 needs curve complexity 2") {
    auto s = gen_comb_cactus(5);
    CHECK(!dp_cactus_curve(s, 1, false).feasible);
    auto r = dp_cactus_curve(s, 2, false);
    REQUIRE(r.feasible);
    CHECK(r.curve == 2);
  }
  SUBCASE("square with two covering paths: b=0 infeasible, b=1 feasible") {
    auto s = make_support({{"v1", "v2", "v3"}, {"v3", "v4", "v1"}});
    CHECK(!dp_cactus_curve(s, 0, false).feasible);
    auto r = dp_cactus_curve(s, 1, false);
    REQUIRE(r.feasible);
    CHECK(r.curve == 1);
  }
}

TEST_CASE("cactus DP agrees with the oracle on random cacti") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 60; ++iter) {
    auto s = gen_random_cactus_support(rng());
    CAPTURE(iter);
    for (bool planar : {false, true}) {
      OracleOptions opt;
      opt.planar = planar;
      auto oracle = oracle_solve(s, OracleObjective::Curve, opt);
      auto dp = dp_cactus_curve_opt(s, planar);
      CHECK(dp.feasible == oracle.feasible);
      if (dp.feasible && oracle.feasible) CHECK(dp.curve == oracle.curve);
      auto oracle_lex = oracle_solve(s, OracleObjective::LexVector, opt);
      if (!planar) {
        auto lex = dp_cactus_lex(s, std::nullopt, false);
        REQUIRE(lex.feasible);
        CHECK(compare_bend_vectors(lex.vector, oracle_lex.vector) == 0);
      } else if (oracle_lex.feasible) {
        auto lex = dp_cactus_lex(s, std::nullopt, true);
        REQUIRE(lex.feasible);
        CHECK(compare_bend_vectors(lex.vector, oracle_lex.vector) == 0);
      }
    }
  }
}

TEST_CASE("kernel by path count") {
  SUBCASE("end-to-end path contracts to a single edge") {
    auto s = make_support({{"a", "b", "c", "d", "e"}});
    auto k = kernel_by_path_count(s);
    CHECK(k.reduced.vertex_count() == 2);
    CHECK(k.reduced.edge_count() == 1);
  }
  SUBCASE("spider with three legs of length 3 contracts to a star") {
    auto s = make_support({{"a3", "a2", "a1", "x", "b1", "b2", "b3"},
                           {"a3", "a2", "a1", "x", "c1", "c2", "c3"},
                           {"b3", "b2", "b1", "x", "c1", "c2", "c3"}});
    auto k = kernel_by_path_count(s);
    CHECK(k.reduced.vertex_count() == 4);
    for (int v = 0; v < k.reduced.vertex_count(); ++v)
      CHECK((k.reduced.degree(v) == 3 || k.reduced.degree(v) == 1));
    auto a = dp_curve_complexity_opt(s);
    auto b = dp_curve_complexity_opt(k.reduced);
    CHECK(a.curve == b.curve);
  }
  SUBCASE("size bound and equivalence on random instances") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 60; ++iter) {
      auto s = gen_random_tree_support(rng());
      CAPTURE(iter);
      auto k = kernel_by_path_count(s);
      CHECK(k.reduced.vertex_count() < 4 * s.path_count());
      CHECK(dp_curve_complexity_opt(k.reduced).curve == dp_curve_complexity_opt(s).curve);
    }
  }
}

TEST_CASE("minimum vertex cover of trees") {
  CHECK(min_vertex_cover_tree(make_support({{"a", "b"}})).size() == 1);
  CHECK(min_vertex_cover_tree(make_support({{"a", "b", "c", "d", "e"}})).size() == 2);
  auto star = make_support({{"a", "x", "b"}, {"c", "x", "d"}});
  auto cover = min_vertex_cover_tree(star);
  REQUIRE(cover.size() == 1);
  CHECK(star.vertex_name(cover[0]) == "x");
}

TEST_CASE("kernel by vertex cover") {
  SUBCASE("small star stays unchanged") {
    auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
    auto k = kernel_by_vertex_cover(s);
    CHECK(k.reduced.vertex_count() == s.vertex_count());
    CHECK(k.reduced.path_count() == s.path_count());
    CHECK(leaf_stripped_vertex_count(s) <=
          2 * static_cast<int>(min_vertex_cover_tree(s).size()) - 1);
  }
  SUBCASE("eight disjoint leaf-to-leaf paths keep three disjoint representatives") {
    std::vector<std::vector<std::string>> paths;
    for (int i = 0; i < 8; ++i)
      paths.push_back({"a" + std::to_string(i), "v", "w", "b" + std::to_string(i)});
    auto s = make_support(paths);
    auto k = kernel_by_vertex_cover(s);
    CHECK(k.reduced.path_count() == 3);
    CHECK(dp_curve_complexity_opt(k.reduced).curve == dp_curve_complexity_opt(s).curve);
  }
  SUBCASE("claim-1 bound and equivalence on random instances") {
    std::mt19937_64 rng(808);
    for (int iter = 0; iter < 60; ++iter) {
      auto s = gen_random_tree_support(rng());
      CAPTURE(iter);
      int k = static_cast<int>(min_vertex_cover_tree(s).size());
      CHECK(leaf_stripped_vertex_count(s) <= 2 * k - 1);
      auto kernel = kernel_by_vertex_cover(s);
      CHECK(dp_curve_complexity_opt(kernel.reduced).curve == dp_curve_complexity_opt(s).curve);
    }
  }
}
