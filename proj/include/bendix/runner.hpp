#pragma once

#include <optional>
#include <string>

#include "bendix/geometry.hpp"
#include "bendix/support.hpp"
#include "json.hpp"

namespace bendix {

struct RunConfig {
  std::string objective;  // total | curve | lexvec | zero | ortho
  std::optional<int> budget;
  bool planar = false;
  bool bnb = false;
  bool timings = false;
  int oracle_max_vertices = 12;
  int oracle_max_paths = 8;
  double wall_limit_sec = 600.0;
  std::string focus_path;  // oracle only: minimize this path's bends
};

struct RunOutcome {
  int exit_code = 0;  // 0 solved, 1 infeasible at the given budget
  nlohmann::ordered_json report;
  std::optional<Drawing> drawing;
};

// Dispatches by graph class and objective; throws Error for invalid
// instances or unsupported combinations (CLI exit code 2).
RunOutcome run_solve(const PathSupport& support, const RunConfig& config);

// Same report schema, brute-force oracle as the solver.
RunOutcome run_oracle(const PathSupport& support, const RunConfig& config);

}  // namespace bendix
