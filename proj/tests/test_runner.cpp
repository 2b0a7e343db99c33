#include <random>

#include "bendix/bench.hpp"
#include "bendix/geometry.hpp"
#include "bendix/runner.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bendix;

namespace {

// recount the drawn bends of the original paths from the report's per-path
// table against the geometry
void check_outcome_geometry(const PathSupport& s, const RunOutcome& out, bool planar) {
  REQUIRE(out.drawing);
  auto rep = verify_drawing(s, *out.drawing);
  CHECK(!rep.degenerate);
  if (planar) CHECK(rep.crossings == 0);
  const auto& per = out.report.at("per_path_bends");
  for (int p = 0; p < s.path_count(); ++p)
    CHECK(rep.per_path_bends[p] == per.at(s.path(p).id).get<int>());
}

}  // namespace

TEST_CASE("planar cactus curve solves draw with matching geometric bends") {
  std::mt19937_64 rng(464646);
  int with_bends = 0;
  for (int iter = 0; iter < 120; ++iter) {
    auto s = gen_random_cactus_support(rng());
    CAPTURE(iter);
    RunConfig cfg;
    cfg.objective = "curve";
    cfg.planar = true;
    auto out = run_solve(s, cfg);
    REQUIRE(out.exit_code == 0);
    check_outcome_geometry(s, out, true);
    if (out.report.at("optimum").get<int>() > 0) ++with_bends;
  }
  CHECK(with_bends > 20);  // the suite must exercise split-and-merge drawings
}

TEST_CASE("cactus lexvec solves draw consistently in both modes") {
  std::mt19937_64 rng(737373);
  for (int iter = 0; iter < 60; ++iter) {
    auto s = gen_random_cactus_support(rng());
    CAPTURE(iter);
    for (bool planar : {false, true}) {
      RunConfig cfg;
      cfg.objective = "lexvec";
      cfg.planar = planar;
      auto out = run_solve(s, cfg);
      REQUIRE(out.exit_code == 0);
      check_outcome_geometry(s, out, planar);
    }
  }
}

TEST_CASE("tree solves return drawings that match their reports") {
  std::mt19937_64 rng(828282);
  for (int iter = 0; iter < 60; ++iter) {
    auto s = gen_random_tree_support(rng());
    CAPTURE(iter);
    for (const std::string objective : {"total", "curve", "lexvec"}) {
      RunConfig cfg;
      cfg.objective = objective;
      auto out = run_solve(s, cfg);
      REQUIRE(out.exit_code == 0);
      check_outcome_geometry(s, out, true);
    }
  }
}

TEST_CASE("linear cactus total solves report the split count and draw clean") {
  std::mt19937_64 rng(909090);
  int solved = 0;
  for (int iter = 0; iter < 500 && solved < 40; ++iter) {
    auto s = gen_random_linear_cactus_support(rng());
    if (validate(s).kind != GraphClass::Cactus) continue;
    ++solved;
    CAPTURE(iter);
    RunConfig cfg;
    cfg.objective = "total";
    auto out = run_solve(s, cfg);
    REQUIRE(out.exit_code == 0);
    REQUIRE(out.drawing);
    auto rep = verify_drawing(s, *out.drawing);
    CHECK(rep.crossings == 0);
    CHECK(rep.total_bends == out.report.at("optimum").get<long long>());
  }
  CHECK(solved >= 10);
}
