#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bendix/support.hpp"

namespace bendix {

struct CnfFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // signed 1-based literals, repeats allowed
};

CnfFormula parse_dimacs(const std::string& text);

// Perfect binary tree of height h with one path from each leaf to the root.
PathSupport gen_complete_binary_tree(int height);

// Cactus induced by P: <v0,...,v_{n-1}> and Q: <v0,v2,v4,...>.
PathSupport gen_comb_cactus(int n);

// Caterpillar with `spine` spine vertices, `legs` leaves per spine vertex and
// `num_paths` random leaf-to-leaf paths; uncovered edges get single-edge
// paths.
PathSupport gen_caterpillar(int spine, int legs, int num_paths, uint64_t seed);

// Theorem-1(i) tree reduction: diameter 6, 16 paths per clause. Literal
// leaves covered by no reduction path get single-edge covering paths.
struct Sat3Reduction {
  PathSupport support;
  CnfFormula formula;
  int reduction_paths = 0;  // 16 m
  int padding_paths = 0;
  // per clause, per copy: leaf vertex names in order A1, A2, B1, B2 and the
  // literal each represents
  struct CopyInfo {
    std::string root, child_a, child_b;
    std::array<std::string, 4> leaves;
    std::array<int, 4> literal;
  };
  std::vector<std::array<CopyInfo, 4>> copies;
};

Sat3Reduction gen_3sat_reduction(const CnfFormula& formula);

// Alignment realizing curve complexity 3 from a satisfying assignment
// (assignment[i] = value of variable i+1).
Alignment sat3_alignment(const Sat3Reduction& red, const std::vector<bool>& assignment);

// NAE-3-SAT reduction (diameter 4). n0/n1 are the decision targets adjusted
// for the always-straight covering paths; base_n0/base_n1 are the values
// n + 2m and 2m from the construction.
struct NaeReduction {
  PathSupport support;
  long long n0 = 0, n1 = 0;
  long long base_n0 = 0, base_n1 = 0;
  int padding_paths = 0;
};

NaeReduction gen_nae_reduction(const CnfFormula& formula);

// Max-degree-3 reduction with alignment gadgets (generator only).
PathSupport gen_hardness_degree3(const CnfFormula& formula);
int degree3_budget(const CnfFormula& formula);

// Random suites used by the acceptance tests; union of sampled tree/cactus
// paths, hence covered by construction.
PathSupport gen_random_tree_support(uint64_t seed);
PathSupport gen_random_cactus_support(uint64_t seed);
PathSupport gen_random_linear_cactus_support(uint64_t seed);

// rows x cols grid graph with its natural embedding plus monotone lattice
// paths; uncovered edges get single-edge paths.
PathSupport gen_random_plane4_support(int rows, int cols, int num_paths, uint64_t seed);

}  // namespace bendix
