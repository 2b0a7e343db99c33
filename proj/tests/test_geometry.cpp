#include <random>

#include "bendix/bench.hpp"
#include "bendix/cactus.hpp"
#include "bendix/fpt.hpp"
#include "bendix/geometry.hpp"
#include "bendix/oracle.hpp"
#include "bendix/svg.hpp"
#include "bendix/tree_opt.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bendix;
using testutil::align;
using testutil::make_support;

TEST_CASE("single edge realizes as two distinct points") {
  auto s = make_support({{"a", "b"}});
  auto d = realize_tree(s, {});
  CHECK(d.coords[0] != d.coords[1]);
  auto rep = verify_drawing(s, d);
  CHECK(!rep.degenerate);
  CHECK(rep.crossings == 0);
}

TEST_CASE("star alignment puts a, x, b on a line and c off it") {
  auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
  auto alignment = align(s, {{{"x", "a"}, {"x", "b"}}});
  auto d = realize_tree(s, alignment);
  auto rep = verify_drawing(s, d, alignment);
  CHECK(rep.crossings == 0);
  CHECK(rep.alignment_consistent);
  auto counted = count_bends(s, alignment);
  CHECK(rep.per_path_bends == counted.per_path);
}

TEST_CASE("collinear and right-angle bends are counted geometrically") {
  auto s = make_support({{"a", "b", "c"}});
  Drawing straight;
  straight.coords = {{0, 0}, {1, 0}, {2, 0}};
  straight.edge_bends.assign(s.edge_count(), {});
  CHECK(verify_drawing(s, straight).per_path_bends == std::vector<int>{0});
  Drawing bent;
  bent.coords = {{0, 0}, {1, 0}, {1, 1}};
  bent.edge_bends.assign(s.edge_count(), {});
  CHECK(verify_drawing(s, bent).per_path_bends == std::vector<int>{1});
}

TEST_CASE("realized tree alignments reproduce the combinatorial bend counts") {
  std::mt19937_64 rng(120120);
  for (int iter = 0; iter < 100; ++iter) {
    auto s = gen_random_tree_support(rng());
    CAPTURE(iter);
    auto best = minimize_total_bends(s);
    auto d = realize_tree(s, best.alignment);
    auto rep = verify_drawing(s, d, best.alignment);
    CHECK(rep.crossings == 0);
    CHECK(!rep.degenerate);
    CHECK(rep.alignment_consistent);
    CHECK(rep.per_path_bends == count_bends(s, best.alignment).per_path);

    auto dp = dp_curve_complexity_opt(s);
    auto d2 = realize_tree(s, dp.alignment);
    auto rep2 = verify_drawing(s, d2, dp.alignment);
    CHECK(rep2.crossings == 0);
    CHECK(rep2.max_bends == dp.curve);
  }
}

TEST_CASE("triangle of single-edge paths realizes as a convex triangle") {
  auto s = make_support({{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
  auto d = realize_linear_cactus(s, true);
  auto rep = verify_drawing(s, d);
  CHECK(rep.crossings == 0);
  CHECK(rep.total_bends == 0);
  CHECK(!rep.degenerate);
}

TEST_CASE("two cycles with one aligned pair stay collinear through the cut vertex") {
  // square A aligned at v via <a1,v,a2>, square B entered straight from a
  // path crossing blocks
  auto s = make_support({
      {"a1", "v", "a2"},
      {"a1", "ma"},
      {"ma", "a2"},
      {"b1", "mb"},
      {"mb", "b2"},
      {"b1", "v"},
      {"v", "b2"},
  });
  REQUIRE(validate(s).linear);
  REQUIRE(zero_curve_complexity(s, true));
  auto d = realize_linear_cactus(s, true);
  auto rep = verify_drawing(s, d);
  CHECK(rep.crossings == 0);
  CHECK(rep.total_bends == 0);
}

TEST_CASE("odd constraint pattern realizes without bends when crossings are allowed") {
  std::vector<std::vector<std::string>> paths = {
      {"d1", "v", "d2"},
      {"a2", "v", "b1"},
      {"b2", "v", "c1"},
      {"c2", "v", "a1"},
  };
  for (const auto& x : {"a", "b", "c", "d"}) {
    paths.push_back({std::string(x) + "1", "m" + std::string(x)});
    paths.push_back({"m" + std::string(x), std::string(x) + "2"});
  }
  auto s = make_support(paths);
  REQUIRE(zero_curve_complexity(s, false));
  REQUIRE(!zero_curve_complexity(s, true));
  auto d = realize_linear_cactus(s, false);
  auto rep = verify_drawing(s, d);
  CHECK(rep.total_bends == 0);
  CHECK(!rep.degenerate);
}

TEST_CASE("planar-mode cactus realizations have no crossings on the random suite") {
  std::mt19937_64 rng(424243);
  int checked = 0;
  for (int iter = 0; iter < 200 && checked < 60; ++iter) {
    auto s = gen_random_linear_cactus_support(rng());
    if (!zero_curve_complexity(s, true)) continue;
    ++checked;
    CAPTURE(iter);
    auto d = realize_linear_cactus(s, true);
    auto rep = verify_drawing(s, d);
    CHECK(rep.crossings == 0);
    CHECK(rep.total_bends == 0);
    CHECK(!rep.degenerate);
  }
  CHECK(checked >= 30);
}

TEST_CASE("merged zero instances also realize planar") {
  std::mt19937_64 rng(89891);
  int checked = 0;
  for (int iter = 0; iter < 300 && checked < 40; ++iter) {
    auto s = gen_random_cactus_support(rng());
    if (!zero_curve_complexity(s, true)) continue;
    auto merged = merge_shared(s);
    auto ms = merged_support(s, merged);
    ++checked;
    CAPTURE(iter);
    auto d = realize_linear_cactus(ms, true);
    auto rep = verify_drawing(ms, d);
    CHECK(rep.crossings == 0);
    CHECK(rep.total_bends == 0);
  }
  CHECK(checked >= 10);
}

TEST_CASE("aligned pairs pass the collinearity test with a wide margin") {
  // aligned pairs must sit three orders of magnitude below the tolerance,
  // unaligned pairs three orders above it
  std::mt19937_64 rng(515151);
  double worst_aligned = 0, best_unaligned = 1e300;
  for (int iter = 0; iter < 60; ++iter) {
    auto s = gen_random_tree_support(rng());
    auto best = minimize_total_bends(s);
    auto d = realize_tree(s, best.alignment);
    for (int v = 0; v < s.vertex_count(); ++v) {
      const auto& inc = s.incident_edges(v);
      for (size_t i = 0; i < inc.size(); ++i)
        for (size_t j = i + 1; j < inc.size(); ++j) {
          auto dir = [&](int e) {
            int w = s.edge_other(e, v);
            return std::pair<double, double>{d.coords[w].first - d.coords[v].first,
                                             d.coords[w].second - d.coords[v].second};
          };
          auto [x1, y1] = dir(inc[i]);
          auto [x2, y2] = dir(inc[j]);
          double rel = std::abs(x1 * y2 - y1 * x2) /
                       (std::hypot(x1, y1) * std::hypot(x2, y2));
          if (best.alignment.aligned(inc[i], inc[j]))
            worst_aligned = std::max(worst_aligned, rel);
          else
            best_unaligned = std::min(best_unaligned, rel);
        }
    }
  }
  CHECK(worst_aligned <= kCollinearTol / 1000.0);
  CHECK(best_unaligned >= kCollinearTol * 1000.0);
}

TEST_CASE("svg output is deterministic and well formed") {
  auto s = make_support({{"a", "x", "b"}, {"a", "x", "c"}});
  auto alignment = align(s, {{{"x", "a"}, {"x", "b"}}});
  auto d = realize_tree(s, alignment);
  auto svg1 = emit_svg(s, d);
  auto svg2 = emit_svg(s, d);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.rfind("</svg>\n") == svg1.size() - 7);
  // one group per path
  size_t count = 0, pos = 0;
  while ((pos = svg1.find("<g ", pos)) != std::string::npos) {
    ++count;
    pos += 3;
  }
  CHECK(count == 2);
}
