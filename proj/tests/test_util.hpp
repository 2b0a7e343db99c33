#pragma once

#include <string>
#include <vector>

#include "bendix/support.hpp"

namespace bendix::testutil {

// Compact instance builder: vertices "a".."z" style names, edges implied by
// the paths unless given explicitly.
inline PathSupport make_support(std::vector<std::vector<std::string>> path_seqs,
                                std::vector<std::pair<std::string, std::string>> extra_edges = {}) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges = extra_edges;
  auto note_vertex = [&](const std::string& v) {
    for (const auto& w : verts)
      if (w == v) return;
    verts.push_back(v);
  };
  for (const auto& [a, b] : extra_edges) {
    note_vertex(a);
    note_vertex(b);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> paths;
  int k = 0;
  for (const auto& seq : path_seqs) {
    for (const auto& v : seq) note_vertex(v);
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      bool have = false;
      for (const auto& [a, b] : edges)
        if ((a == seq[i] && b == seq[i + 1]) || (a == seq[i + 1] && b == seq[i])) have = true;
      if (!have) edges.emplace_back(seq[i], seq[i + 1]);
    }
    paths.emplace_back("p" + std::to_string(k++), seq);
  }
  return PathSupport::from_parts(verts, edges, paths);
}

inline Alignment align(const PathSupport& s,
                       std::vector<std::pair<std::pair<std::string, std::string>,
                                             std::pair<std::string, std::string>>> pairs) {
  Alignment a;
  for (const auto& [e1, e2] : pairs) {
    int i1 = s.edge_index(s.vertex_index(e1.first), s.vertex_index(e1.second));
    int i2 = s.edge_index(s.vertex_index(e2.first), s.vertex_index(e2.second));
    a.add(i1, i2);
  }
  a.canonicalize();
  return a;
}

}  // namespace bendix::testutil
