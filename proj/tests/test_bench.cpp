#include <random>

#include "bendix/bench.hpp"
#include "bendix/fpt.hpp"
#include "bendix/oracle.hpp"
#include "doctest.h"

using namespace bendix;

TEST_CASE("binary tree generator shapes") {
  auto s1 = gen_complete_binary_tree(1);
  CHECK(s1.vertex_count() == 3);
  CHECK(s1.path_count() == 2);
  auto s2 = gen_complete_binary_tree(2);
  CHECK(s2.vertex_count() == 7);
  CHECK(s2.path_count() == 4);
  CHECK(validate(s2).kind == GraphClass::Tree);
  auto r = dp_curve_complexity_opt(s2);
  CHECK(r.curve == 1);
}

TEST_CASE("comb cactus generator and its lower bound") {
  auto s = gen_comb_cactus(5);
  CHECK(s.vertex_count() == 5);
  CHECK(validate(s).kind == GraphClass::Cactus);
  CHECK(s.edge_index(s.vertex_index("v0"), s.vertex_index("v2")) >= 0);
  CHECK(s.edge_index(s.vertex_index("v2"), s.vertex_index("v4")) >= 0);

  OracleOptions opt;
  opt.focus_path = 0;  // path P
  auto r5 = oracle_solve(s, OracleObjective::FocusPath, opt);
  REQUIRE(r5.feasible);
  CHECK(r5.focus_bends >= 2);
  CHECK(r5.focus_bends == 2);

  auto s7 = gen_comb_cactus(7);
  auto r7 = oracle_solve(s7, OracleObjective::FocusPath, opt);
  REQUIRE(r7.feasible);
  CHECK(r7.focus_bends == 3);
}

TEST_CASE("caterpillar generator produces caterpillar tree supports") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 20; ++iter) {
    auto s = gen_caterpillar(1 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 3),
                             1 + static_cast<int>(rng() % 5), rng());
    CAPTURE(iter);
    CHECK(validate(s).kind == GraphClass::Tree);
  }
}

TEST_CASE("3-SAT reduction structure") {
  CnfFormula f;
  f.variables = 2;
  f.clauses = {{1, -2, 2}};
  auto red = gen_3sat_reduction(f);
  CHECK(red.support.vertex_count() == 1 + 3 * 2 + 28 * 1);
  CHECK(red.reduction_paths == 16);
  CHECK(validate(red.support).kind == GraphClass::Tree);
  // diameter <= 6 and every reduction path has length <= 5
  for (int p = 0; p < red.support.path_count(); ++p)
    CHECK(red.support.path(p).length() <= 5);
}

TEST_CASE("satisfiable formulas give alignments with exactly three max bends") {
  for (int bits = 0; bits < 4; ++bits) {
    CnfFormula f;
    f.variables = 2;
    f.clauses = {{1, -2, 2}};
    std::vector<bool> assignment{(bits & 1) != 0, (bits & 2) != 0};
    auto red = gen_3sat_reduction(f);
    auto a = sat3_alignment(red, assignment);
    auto rep = count_bends(red.support, a);
    CHECK(rep.curve == 3);
  }
}

TEST_CASE("every 3-SAT formula with n<=2, m=1 is satisfiable and achieves three bends") {
  // exhaustive over the literal choices
  for (int l1 = -2; l1 <= 2; ++l1)
    for (int l2 = -2; l2 <= 2; ++l2)
      for (int l3 = -2; l3 <= 2; ++l3) {
        if (!l1 || !l2 || !l3) continue;
        CnfFormula f;
        f.variables = 2;
        f.clauses = {{l1, l2, l3}};
        // find a satisfying assignment
        bool found = false;
        for (int bits = 0; bits < 4 && !found; ++bits) {
          std::vector<bool> assignment{(bits & 1) != 0, (bits & 2) != 0};
          auto value = [&](int lit) {
            return lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
          };
          if (!value(l1) && !value(l2) && !value(l3)) continue;
          found = true;
          auto red = gen_3sat_reduction(f);
          auto a = sat3_alignment(red, assignment);
          CHECK(count_bends(red.support, a).curve == 3);
        }
        CHECK(found);
      }
}

TEST_CASE("NAE reduction targets") {
  CnfFormula f;
  f.variables = 2;
  f.clauses = {{1, 2, -1}};
  auto red = gen_nae_reduction(f);
  CHECK(red.base_n0 == 4);
  CHECK(red.base_n1 == 2);
  CHECK(validate(red.support).kind == GraphClass::Tree);

  OracleOptions opt;
  opt.max_vertices = 64;
  opt.max_paths = 32;
  opt.nae_n0 = red.n0;
  opt.nae_n1 = red.n1;
  auto r = oracle_solve(red.support, OracleObjective::NaeTargets, opt);
  CHECK(r.targets_achievable);  // 1=true, 2=false is not-all-equal
}

TEST_CASE("non-NAE-satisfiable formula misses the targets") {
  CnfFormula f;
  f.variables = 1;
  f.clauses = {{1, 1, 1}};
  auto red = gen_nae_reduction(f);
  OracleOptions opt;
  opt.max_vertices = 64;
  opt.max_paths = 32;
  opt.nae_n0 = red.n0;
  opt.nae_n1 = red.n1;
  auto r = oracle_solve(red.support, OracleObjective::NaeTargets, opt);
  CHECK(!r.targets_achievable);
}

TEST_CASE("degree-3 reduction structure") {
  CnfFormula f;
  f.variables = 2;
  f.clauses = {{1, -2, 2}};
  auto s = gen_hardness_degree3(f);
  CHECK(validate(s).kind == GraphClass::Tree);
  for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) <= 3);
  CHECK(degree3_budget(f) == 4);
  // all variable-clause paths share one length
  int len = -1;
  for (int p = 0; p < s.path_count(); ++p) {
    if (s.path(p).id.rfind("q", 0) != 0) continue;
    if (len < 0) len = s.path(p).length();
    CHECK(s.path(p).length() == len);
  }
  CHECK(len > 0);
}

TEST_CASE("oracle caps reject large instances without branch and bound") {
  CnfFormula f;
  f.variables = 2;
  f.clauses = {{1, -2, 2}};
  auto red = gen_3sat_reduction(f);
  CHECK_THROWS_WITH_AS(oracle_solve(red.support, OracleObjective::Curve),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("oracle results are invariant under vertex relabeling") {
  std::mt19937_64 rng(314159);
  for (int iter = 0; iter < 20; ++iter) {
    auto s = gen_random_tree_support(rng());
    CAPTURE(iter);
    // relabel: prefix names so the sorted order flips around
    std::vector<std::string> names;
    for (int v = 0; v < s.vertex_count(); ++v)
      names.push_back((v % 2 ? "zz" : "aa") + s.vertex_name(v));
    std::vector<Path> paths;
    for (const auto& p : s.paths()) paths.push_back(p);
    auto relabeled = PathSupport::from_indexed(std::move(names), s.edges(), std::move(paths));
    auto a = oracle_solve(s, OracleObjective::Curve);
    auto b = oracle_solve(relabeled, OracleObjective::Curve);
    CHECK(a.curve == b.curve);
    auto la = oracle_solve(s, OracleObjective::LexVector);
    auto lb = oracle_solve(relabeled, OracleObjective::LexVector);
    CHECK(compare_bend_vectors(la.vector, lb.vector) == 0);
  }
}

TEST_CASE("generators round-trip through validate") {
  std::mt19937_64 rng(2222);
  for (int iter = 0; iter < 30; ++iter) {
    CHECK_NOTHROW(validate(gen_random_tree_support(rng())));
    CHECK_NOTHROW(validate(gen_random_cactus_support(rng())));
  }
  CHECK_NOTHROW(validate(gen_random_plane4_support(3, 3, 4, 7)));
}

TEST_CASE("grids classify as plane 4-graphs") {
  auto s = gen_random_plane4_support(2, 3, 2, 11);
  GraphClass c = validate(s);
  CHECK(c.kind == GraphClass::Plane4);
}

TEST_CASE("small caterpillar supports stay within curve complexity 2 by the oracle") {
  std::mt19937_64 rng(606060);
  int checked = 0;
  for (int iter = 0; iter < 40 && checked < 15; ++iter) {
    auto s = gen_caterpillar(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2),
                             1 + static_cast<int>(rng() % 4), rng());
    if (s.vertex_count() > 10 || s.path_count() > 6) continue;
    ++checked;
    CAPTURE(iter);
    auto r = oracle_solve(s, OracleObjective::Curve);
    REQUIRE(r.feasible);
    CHECK(r.curve <= 2);
  }
  CHECK(checked >= 10);
}
