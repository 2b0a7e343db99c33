#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/stat.h>

#include "bendix/json_io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bendix;

namespace {

const std::string kCli = BENDIX_CLI_PATH;
const std::string kTmp = BENDIX_TMP_DIR;

void ensure_tmp() { mkdir(kTmp.c_str(), 0777); }

int run(const std::string& args) {
  int code = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(code);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("solve on the star instance reports optimum 1") {
  ensure_tmp();
  auto s = testutil::make_support({{"a", "x", "b"}, {"a", "x", "c"}});
  save_support(s, kTmp + "/star.json");
  REQUIRE(run("solve --objective total --out " + kTmp + "/star_report.json " + kTmp +
              "/star.json") == 0);
  auto j = nlohmann::json::parse(slurp(kTmp + "/star_report.json"));
  CHECK(j["schema"] == "bendix/1");
  CHECK(j["class"] == "tree");
  CHECK(j["optimum"] == 1);
  CHECK(j["status"] == "optimal");
}

TEST_CASE("zero objective on the covered square is infeasible with exit 1") {
  ensure_tmp();
  auto s = testutil::make_support({{"v1", "v2", "v3"}, {"v3", "v4", "v1"}});
  save_support(s, kTmp + "/square.json");
  CHECK(run("solve --objective zero --planar --out " + kTmp + "/sq_report.json " + kTmp +
            "/square.json") == 1);
  auto j = nlohmann::json::parse(slurp(kTmp + "/sq_report.json"));
  CHECK(j["status"] == "infeasible");
  CHECK(j["optimum"] == false);
}

TEST_CASE("ortho objective on the embedded square reports two bends") {
  ensure_tmp();
  write(kTmp + "/emb_square.json", R"({
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a","b"], ["b","c"], ["c","d"], ["a","d"]],
    "paths": [{"id":"p1","vertices":["a","b","c"]},
              {"id":"p2","vertices":["c","d","a"]}],
    "embedding": {
      "rotation": {
        "a": [["a","b"],["a","d"]],
        "b": [["b","c"],["b","a"]],
        "c": [["c","d"],["c","b"]],
        "d": [["d","a"],["d","c"]]
      },
      "outer_face_edge": ["a","d"]
    }
  })");
  REQUIRE(run("solve --objective ortho --out " + kTmp + "/ortho_report.json --svg " + kTmp +
              "/ortho.svg " + kTmp + "/emb_square.json") == 0);
  auto j = nlohmann::json::parse(slurp(kTmp + "/ortho_report.json"));
  CHECK(j["optimum"] == 2);
  CHECK(slurp(kTmp + "/ortho.svg").find("<svg") != std::string::npos);
}

TEST_CASE("invalid input exits with code 2") {
  ensure_tmp();
  write(kTmp + "/broken.json", "{\"vertices\": [\"a\"]}");
  CHECK(run("solve --objective total " + kTmp + "/broken.json") == 2);
  CHECK(run("solve --objective total " + kTmp + "/missing_file.json") == 2);
}

TEST_CASE("gen subcommand produces valid instances") {
  ensure_tmp();
  REQUIRE(run("gen binary-tree --height 2 --out " + kTmp + "/bt.json") == 0);
  auto s = load_support(kTmp + "/bt.json");
  CHECK(s.vertex_count() == 7);
  CHECK(s.path_count() == 4);

  REQUIRE(run("gen comb --n 5 --out " + kTmp + "/comb.json") == 0);
  CHECK(load_support(kTmp + "/comb.json").vertex_count() == 5);

  write(kTmp + "/f.cnf", "p cnf 2 1\n1 -2 2 0\n");
  REQUIRE(run("gen sat3 --formula " + kTmp + "/f.cnf --out " + kTmp + "/sat3.json") == 0);
  CHECK(load_support(kTmp + "/sat3.json").vertex_count() == 35);

  CHECK(run("gen no-such-family --out " + kTmp + "/x.json") == 2);
}

TEST_CASE("oracle command enforces the size caps") {
  ensure_tmp();
  REQUIRE(run("gen caterpillar --spine 12 --legs 2 --paths 6 --seed 5 --out " + kTmp +
              "/big.json") == 0);
  auto s = load_support(kTmp + "/big.json");
  REQUIRE(s.vertex_count() > 12);
  CHECK(run("oracle --objective curve " + kTmp + "/big.json") == 2);
  CHECK(run("oracle --objective curve --bnb --budget 2 " + kTmp + "/big.json") <= 1);
}

TEST_CASE("identical runs produce byte-identical reports and svgs") {
  ensure_tmp();
  REQUIRE(run("gen random-tree --seed 99 --out " + kTmp + "/rt.json") == 0);
  for (int round = 0; round < 2; ++round) {
    std::string suffix = round == 0 ? "1" : "2";
    REQUIRE(run("solve --objective lexvec --out " + kTmp + "/det_" + suffix + ".json --svg " +
                kTmp + "/det_" + suffix + ".svg " + kTmp + "/rt.json") == 0);
  }
  CHECK(slurp(kTmp + "/det_1.json") == slurp(kTmp + "/det_2.json"));
  CHECK(slurp(kTmp + "/det_1.svg") == slurp(kTmp + "/det_2.svg"));
  CHECK(!slurp(kTmp + "/det_1.svg").empty());
}

TEST_CASE("reports agree between solve and oracle on a batch of random trees") {
  ensure_tmp();
  for (int i = 0; i < 10; ++i) {
    std::string inst = kTmp + "/batch" + std::to_string(i) + ".json";
    REQUIRE(run("gen random-tree --seed " + std::to_string(1000 + i) + " --out " + inst) == 0);
    REQUIRE(run("solve --objective curve --out " + kTmp + "/s.json " + inst) == 0);
    REQUIRE(run("oracle --objective curve --out " + kTmp + "/o.json " + inst) == 0);
    auto sj = nlohmann::json::parse(slurp(kTmp + "/s.json"));
    auto oj = nlohmann::json::parse(slurp(kTmp + "/o.json"));
    CHECK(sj["optimum"] == oj["optimum"]);
  }
}

TEST_CASE("batch mode with parallel jobs writes one report per input") {
  ensure_tmp();
  mkdir((kTmp + "/batchout").c_str(), 0777);
  std::string inputs;
  for (int i = 0; i < 4; ++i) {
    std::string inst = kTmp + "/multi" + std::to_string(i) + ".json";
    REQUIRE(run("gen random-tree --seed " + std::to_string(500 + i) + " --out " + inst) == 0);
    inputs += " " + inst;
  }
  REQUIRE(run("solve --objective total --jobs 2 --out-dir " + kTmp + "/batchout" + inputs) == 0);
  for (int i = 0; i < 4; ++i) {
    auto j = nlohmann::json::parse(slurp(kTmp + "/batchout/multi" + std::to_string(i) +
                                         ".report.json"));
    CHECK(j["status"] == "optimal");
  }
}

TEST_CASE("curve objective with an unreachable budget exits 1") {
  ensure_tmp();
  auto s = testutil::make_support({{"a", "x", "b"}, {"a", "x", "c"}});
  save_support(s, kTmp + "/star2.json");
  CHECK(run("solve --objective curve --budget 0 " + kTmp + "/star2.json") == 1);
  CHECK(run("solve --objective curve --budget 1 " + kTmp + "/star2.json") == 0);
}
