#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "bendix/bench.hpp"
#include "bendix/json_io.hpp"
#include "bendix/runner.hpp"
#include "bendix/svg.hpp"

namespace {

using namespace bendix;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadInput, "cannot write '" + path + "'");
  out << content;
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

int run_one(const std::string& input, const RunConfig& cfg, bool oracle, const std::string& out,
            const std::string& svg) {
  PathSupport s = load_support(input);
  RunOutcome outcome = oracle ? run_oracle(s, cfg) : run_solve(s, cfg);
  std::string text = outcome.report.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  if (!svg.empty()) {
    if (!outcome.drawing) throw Error(Errc::BadInput, "no drawing available for this result");
    write_file(svg, emit_svg(s, *outcome.drawing));
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bendix: bend-optimal drawings of path-based supports"};
  app.require_subcommand(1);

  // ---- solve / oracle ----
  RunConfig cfg;
  std::vector<std::string> inputs;
  std::string out_file, svg_file, out_dir;
  int jobs = 1;

  auto add_solver_options = [&](CLI::App* cmd, bool oracle) {
    cmd->add_option("input", inputs, "instance file(s)")->required()->expected(-1);
    cmd->add_option("--objective", cfg.objective, "total|curve|lexvec|zero|ortho")
        ->required();
    cmd->add_option("--budget", [&](const std::vector<std::string>& vals) {
      cfg.budget = std::stoi(vals[0]);
      return true;
    }, "per-path bend budget");
    cmd->add_flag("--planar", cfg.planar, "require planar realizations");
    cmd->add_flag("--timings", cfg.timings, "include wall time in the report");
    cmd->add_option("--out", out_file, "report file (default stdout)");
    cmd->add_option("--svg", svg_file, "drawing output");
    cmd->add_option("--out-dir", out_dir, "directory for per-input reports");
    cmd->add_option("--jobs", jobs, "parallel workers for multiple inputs");
    if (oracle) {
      cmd->add_flag("--bnb", cfg.bnb, "branch-and-bound mode (lifts the size caps)");
      cmd->add_option("--focus-path", cfg.focus_path, "minimize this path's bends");
      cmd->add_option("--max-vertices", cfg.oracle_max_vertices, "vertex cap");
      cmd->add_option("--max-paths", cfg.oracle_max_paths, "path cap");
      cmd->add_option("--wall-limit", cfg.wall_limit_sec, "wall budget in seconds");
    }
  };
  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  add_solver_options(solve, false);
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solver");
  add_solver_options(oracle, true);

  // ---- gen ----
  CLI::App* gen = app.add_subcommand("gen", "generate benchmark instances");
  std::string family, formula_file, gen_out;
  int height = 2, comb_n = 5, spine = 4, legs = 2, num_paths = 4, rows = 3, cols = 3;
  uint64_t seed = 1;
  bool linear_only = false;
  gen->add_option("family", family,
                  "binary-tree|comb|caterpillar|sat3|nae|deg3|random-tree|random-cactus|grid")
      ->required();
  gen->add_option("--height", height, "binary tree height");
  gen->add_option("--n", comb_n, "comb cactus size");
  gen->add_option("--spine", spine, "caterpillar spine length");
  gen->add_option("--legs", legs, "leaves per spine vertex");
  gen->add_option("--paths", num_paths, "number of random paths");
  gen->add_option("--rows", rows, "grid rows");
  gen->add_option("--cols", cols, "grid cols");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--formula", formula_file, "DIMACS CNF input");
  gen->add_flag("--linear", linear_only, "restrict random cacti to linear supports");
  gen->add_option("--out", gen_out, "instance file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      PathSupport s = [&]() -> PathSupport {
        if (family == "binary-tree") return gen_complete_binary_tree(height);
        if (family == "comb") return gen_comb_cactus(comb_n);
        if (family == "caterpillar") return gen_caterpillar(spine, legs, num_paths, seed);
        if (family == "sat3") return gen_3sat_reduction(parse_dimacs(read_file(formula_file))).support;
        if (family == "nae") return gen_nae_reduction(parse_dimacs(read_file(formula_file))).support;
        if (family == "deg3") return gen_hardness_degree3(parse_dimacs(read_file(formula_file)));
        if (family == "random-tree") return gen_random_tree_support(seed);
        if (family == "random-cactus")
          return linear_only ? gen_random_linear_cactus_support(seed)
                             : gen_random_cactus_support(seed);
        if (family == "grid") return gen_random_plane4_support(rows, cols, num_paths, seed);
        throw Error(Errc::UnknownFamily, "unknown family '" + family + "'");
      }();
      std::string text = support_to_json(s).dump(2) + "\n";
      if (gen_out.empty())
        std::cout << text;
      else
        write_file(gen_out, text);
      return 0;
    }

    bool is_oracle = app.got_subcommand("oracle");
    if (inputs.size() == 1 && out_dir.empty())
      return run_one(inputs[0], cfg, is_oracle, out_file, svg_file);

    // batch mode: per-input reports in out_dir, optional parallel workers
    if (out_dir.empty()) throw Error(Errc::BadInput, "--out-dir is required for multiple inputs");
    std::mutex mu;
    int worst = 0;
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    auto work = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= inputs.size()) break;
        std::string stem = stem_of(inputs[i]);
        int code = run_one(inputs[i], cfg, is_oracle, out_dir + "/" + stem + ".report.json",
                           svg_file.empty() ? "" : out_dir + "/" + stem + ".svg");
        std::lock_guard<std::mutex> lock(mu);
        worst = std::max(worst, code);
      }
    };
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return worst;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
