#include "bendix/json_io.hpp"

#include <fstream>

namespace bendix {

using nlohmann::json;
using nlohmann::ordered_json;

PathSupport support_from_json(const json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::BadInput, "edge must be a pair");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> paths;
    for (const auto& p : j.at("paths"))
      paths.emplace_back(p.at("id").get<std::string>(),
                         p.at("vertices").get<std::vector<std::string>>());

    std::optional<PlaneEmbedding> embedding;
    if (j.contains("embedding") && !j["embedding"].is_null()) {
      // Build index map the same way PathSupport does: sorted vertex ids.
      std::vector<std::string> sorted = vertices;
      std::sort(sorted.begin(), sorted.end());
      auto index_of = [&](const std::string& id) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
        if (it == sorted.end() || *it != id) throw Error(Errc::UnknownVertex, "embedding names unknown vertex '" + id + "'");
        return static_cast<int>(it - sorted.begin());
      };
      PlaneEmbedding emb;
      emb.rotation.assign(sorted.size(), {});
      const auto& rot = j["embedding"].at("rotation");
      for (auto it = rot.begin(); it != rot.end(); ++it) {
        int v = index_of(it.key());
        for (const auto& pair : it.value()) {
          if (!pair.is_array() || pair.size() != 2)
            throw Error(Errc::InvalidEmbedding, "rotation entries must be edges");
          std::string a = pair[0].get<std::string>();
          std::string b = pair[1].get<std::string>();
          if (a != it.key()) std::swap(a, b);
          if (a != it.key())
            throw Error(Errc::InvalidEmbedding, "rotation edge not incident to its vertex");
          emb.rotation[v].push_back(index_of(b));
        }
      }
      const auto& of = j["embedding"].at("outer_face_edge");
      emb.outer_dart = {index_of(of[0].get<std::string>()), index_of(of[1].get<std::string>())};
      embedding = std::move(emb);
    }
    return PathSupport::from_parts(std::move(vertices), std::move(edges), std::move(paths),
                                   std::move(embedding));
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, std::string("malformed instance json: ") + e.what());
  }
}

ordered_json support_to_json(const PathSupport& s) {
  ordered_json j;
  j["vertices"] = json::array();
  for (int v = 0; v < s.vertex_count(); ++v) j["vertices"].push_back(s.vertex_name(v));
  j["edges"] = json::array();
  for (int e = 0; e < s.edge_count(); ++e)
    j["edges"].push_back({s.vertex_name(s.edge(e).first), s.vertex_name(s.edge(e).second)});
  j["paths"] = json::array();
  for (const auto& p : s.paths()) {
    ordered_json pj;
    pj["id"] = p.id;
    pj["vertices"] = json::array();
    for (int v : p.verts) pj["vertices"].push_back(s.vertex_name(v));
    j["paths"].push_back(pj);
  }
  if (s.embedding()) {
    const auto& emb = *s.embedding();
    ordered_json rot = ordered_json::object();
    for (int v = 0; v < s.vertex_count(); ++v) {
      ordered_json list = json::array();
      for (int w : emb.rotation[v]) list.push_back({s.vertex_name(v), s.vertex_name(w)});
      rot[s.vertex_name(v)] = list;
    }
    j["embedding"] = ordered_json{
        {"rotation", rot},
        {"outer_face_edge",
         {s.vertex_name(emb.outer_dart.first), s.vertex_name(emb.outer_dart.second)}}};
  }
  return j;
}

PathSupport load_support(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::BadInput, "cannot open '" + file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, std::string("cannot parse '") + file + "': " + e.what());
  }
  return support_from_json(j);
}

void save_support(const PathSupport& support, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw Error(Errc::BadInput, "cannot write '" + file + "'");
  out << support_to_json(support).dump(2) << "\n";
}

ordered_json alignment_to_json(const PathSupport& s, const Alignment& alignment) {
  ordered_json j = json::array();
  for (auto [e1, e2] : alignment.pairs) {
    auto [a, b] = s.edge(e1);
    auto [c, d] = s.edge(e2);
    ordered_json pair = ordered_json::array();
    pair.push_back(ordered_json::array({s.vertex_name(a), s.vertex_name(b)}));
    pair.push_back(ordered_json::array({s.vertex_name(c), s.vertex_name(d)}));
    j.push_back(pair);
  }
  return j;
}

Alignment alignment_from_json(const PathSupport& s, const json& j) {
  Alignment a;
  for (const auto& pair : j) {
    int e1 = s.edge_index(s.vertex_index(pair[0][0].get<std::string>()),
                          s.vertex_index(pair[0][1].get<std::string>()));
    int e2 = s.edge_index(s.vertex_index(pair[1][0].get<std::string>()),
                          s.vertex_index(pair[1][1].get<std::string>()));
    if (e1 < 0 || e2 < 0) throw Error(Errc::BadInput, "alignment names a missing edge");
    a.add(e1, e2);
  }
  a.canonicalize();
  return a;
}

}  // namespace bendix
