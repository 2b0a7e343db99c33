#include <random>

#include "bendix/bench.hpp"
#include "bendix/cactus.hpp"
#include "bendix/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bendix;
using testutil::make_support;

TEST_CASE("split witnesses") {
  SUBCASE("textbook split at the star center") {
    auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
    auto w = detect_split(s);
    REQUIRE(w);
    CHECK(s.vertex_name(w->vertex) == "x");
    auto [e1, e2] = s.edge(w->shared_edge);
    CHECK(((s.vertex_name(e1) == "a" && s.vertex_name(e2) == "x") ||
           (s.vertex_name(e1) == "x" && s.vertex_name(e2) == "a")));
  }
  SUBCASE("edge-disjoint paths have no witness") {
    auto s = make_support({{"a", "b"}, {"b", "c"}});
    CHECK(!detect_split(s));
  }
  SUBCASE("duplicate routes do not split") {
    auto s = make_support({{"a", "x", "b"}, {"a", "x", "b"}});
    CHECK(!detect_split(s));
  }
}

TEST_CASE("merging paths that share an edge") {
  SUBCASE("two overlapping chains merge into one") {
    auto s = make_support({{"a", "b", "c"}, {"b", "c", "d"}});
    auto m = merge_shared(s);
    CHECK(m.classes.size() == 1);
    REQUIRE(m.all_paths);
    CHECK(m.merged_verts[0].size() == 4);
  }
  SUBCASE("disjoint paths stay apart") {
    auto s = make_support({{"a", "b"}, {"b", "c"}});
    auto m = merge_shared(s);
    CHECK(m.classes.size() == 2);
  }
  SUBCASE("three pairwise-overlapping chains form a single class") {
    auto s = make_support({{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}});
    auto m = merge_shared(s);
    CHECK(m.classes.size() == 1);
    CHECK(m.merged_verts[0].size() == 5);
  }
  SUBCASE("merge on a split instance is rejected") {
    auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
    CHECK_THROWS_WITH_AS(merge_shared(s), doctest::Contains("SplitPresent"), Error);
  }
  SUBCASE("a class closing a cycle is flagged") {
    auto s = make_support({{"v1", "v2", "v3"}, {"v2", "v3", "v1"}});
    auto m = merge_shared(s);
    CHECK(!m.all_paths);
  }
}

TEST_CASE("two-label cycles forbid zero bends") {
  SUBCASE("square labeled by two merged paths") {
    auto s = make_support({{"v1", "v2", "v3"}, {"v3", "v4", "v1"}});
    auto m = merge_shared(s);
    CHECK(!two_label_cycle_check(s, m));
  }
  SUBCASE("triangle with three labels passes") {
    auto s = make_support({{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
    auto m = merge_shared(s);
    CHECK(two_label_cycle_check(s, m));
  }
  SUBCASE("a tree is vacuously fine") {
    auto s = make_support({{"a", "b"}, {"b", "c"}});
    auto m = merge_shared(s);
    CHECK(two_label_cycle_check(s, m));
  }
}

namespace {

// a square cycle v - <x>1 - m<x> - <x>2 - v whose far edges are covered by
// single-edge paths (keeps the support linear)
std::vector<std::vector<std::string>> square_covers(const std::string& x) {
  return {{x + "1", "m" + x}, {"m" + x, x + "2"}};
}

// two squares sharing v, each aligned at v by a through-path
PathSupport two_aligned_cycles() {
  return testutil::make_support({{"a1", "v", "a2"},
                                 {"b1", "v", "b2"},
                                 {"a1", "ma"},
                                 {"ma", "a2"},
                                 {"b1", "mb"},
                                 {"mb", "b2"}});
}

// one aligned square D plus three squares whose constraint graph at v is a
// triangle (odd)
PathSupport odd_constraint_instance() {
  std::vector<std::vector<std::string>> paths = {
      {"d1", "v", "d2"},  // aligns cycle D
      {"a2", "v", "b1"},  // links A and B
      {"b2", "v", "c1"},  // links B and C
      {"c2", "v", "a1"},  // links C and A
  };
  for (const auto& x : {"a", "b", "c", "d"})
    for (auto& p : square_covers(x)) paths.push_back(p);
  return testutil::make_support(paths);
}

// aligned square plus four cycles linked in a 4-cycle of the constraint
// graph
PathSupport even_constraint_instance() {
  std::vector<std::vector<std::string>> paths = {
      {"d1", "v", "d2"},
      {"a2", "v", "b1"},
      {"b2", "v", "c1"},
      {"c2", "v", "e1"},
      {"e2", "v", "a1"},
  };
  for (const auto& x : {"a", "b", "c", "d", "e"})
    for (auto& p : square_covers(x)) paths.push_back(p);
  return testutil::make_support(paths);
}

}  // namespace

TEST_CASE("planar zero-bend conditions for linear cacti") {
  SUBCASE("two cycles aligned at one vertex violate condition (i)") {
    auto s = two_aligned_cycles();
    REQUIRE(validate(s).kind == GraphClass::Cactus);
    REQUIRE(validate(s).linear);
    auto rep = linear_planar_zero(s);
    CHECK(!rep.ok);
    REQUIRE(!rep.issues.empty());
    CHECK(s.vertex_name(rep.issues[0].first) == "v");
  }
  SUBCASE("odd constraint cycle with an aligned cycle violates condition (ii)") {
    auto s = odd_constraint_instance();
    REQUIRE(validate(s).linear);
    CHECK(!linear_planar_zero(s).ok);
  }
  SUBCASE("even constraint cycle is fine") {
    auto s = even_constraint_instance();
    CHECK(linear_planar_zero(s).ok);
  }
}

TEST_CASE("zero curve complexity pipeline") {
  SUBCASE("triangle of single-edge paths in both modes") {
    auto s = make_support({{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
    CHECK(zero_curve_complexity(s, false));
    CHECK(zero_curve_complexity(s, true));
  }
  SUBCASE("square with two covering paths fails") {
    auto s = make_support({{"v1", "v2", "v3"}, {"v3", "v4", "v1"}});
    CHECK(!zero_curve_complexity(s, false));
    CHECK(!zero_curve_complexity(s, true));
  }
  SUBCASE("odd-constraint pattern: planar no, non-planar yes") {
    auto s = odd_constraint_instance();
    CHECK(zero_curve_complexity(s, false));
    CHECK(!zero_curve_complexity(s, true));
  }
  SUBCASE("agreement with the oracle on random cacti") {
    std::mt19937_64 rng(363636);
    for (int iter = 0; iter < 120; ++iter) {
      auto s = gen_random_cactus_support(rng());
      CAPTURE(iter);
      for (bool planar : {false, true}) {
        OracleOptions opt;
        opt.planar = planar;
        opt.budget = 0;
        auto oracle = oracle_solve(s, OracleObjective::Curve, opt);
        bool expect = oracle.feasible && oracle.curve == 0;
        CHECK(zero_curve_complexity(s, planar) == expect);
      }
    }
  }
}

TEST_CASE("minimum split plans") {
  SUBCASE("tree supports need no splits") {
    auto s = make_support({{"a", "b", "c"}, {"c", "d"}});
    auto plan = min_split_zero_drawing_plan(s);
    CHECK(plan.splits.empty());
  }
  SUBCASE("two aligned cycles at a vertex need one split") {
    auto s = two_aligned_cycles();
    auto plan = min_split_zero_drawing_plan(s);
    CHECK(plan.splits.size() == 1);
    auto split = split_support(s, plan);
    CHECK(linear_planar_zero(split).ok);
  }
  SUBCASE("three aligned cycles next to an odd constraint triangle split fully") {
    std::vector<std::vector<std::string>> paths = {
        {"a1", "v", "a2"},  // aligns cycle A
        {"b1", "v", "b2"},  // aligns cycle B
        {"c1", "v", "c2"},  // aligns cycle C
        {"e2", "v", "f1"},  // E-F
        {"f2", "v", "g1"},  // F-G
        {"g2", "v", "e1"},  // G-E: odd triangle in the constraint graph
    };
    for (const auto& x : {"a", "b", "c", "e", "f", "g"})
      for (auto& p : square_covers(x)) paths.push_back(p);
    auto s = make_support(paths);
    REQUIRE(validate(s).kind == GraphClass::Cactus);
    REQUIRE(validate(s).linear);
    auto plan = min_split_zero_drawing_plan(s);
    CHECK(plan.splits.size() == 3);
    auto split = split_support(s, plan);
    CHECK(linear_planar_zero(split).ok);
  }
  SUBCASE("single aligned cycle with an odd constraint triangle still splits") {
    auto odd = odd_constraint_instance();
    auto plan = min_split_zero_drawing_plan(odd);
    CHECK(plan.splits.size() == 1);  // only the aligned cycle closes at v
    auto split = split_support(odd, plan);
    CHECK(linear_planar_zero(split).ok);
  }
  SUBCASE("per-path bends stay at most one on random linear cacti") {
    std::mt19937_64 rng(111222);
    for (int iter = 0; iter < 80; ++iter) {
      auto s = gen_random_linear_cactus_support(rng());
      CAPTURE(iter);
      auto plan = min_split_zero_drawing_plan(s);
      for (int b : plan.per_path_bends) CHECK(b <= 1);
      auto split = split_support(s, plan);
      CHECK(linear_planar_zero(split).ok);
    }
  }
}
