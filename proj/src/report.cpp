#include <chrono>

#include "bendix/cactus.hpp"
#include "bendix/fpt.hpp"
#include "bendix/json_io.hpp"
#include "bendix/oracle.hpp"
#include "bendix/ortho.hpp"
#include "bendix/runner.hpp"
#include "bendix/tree_opt.hpp"

namespace bendix {

namespace {

using nlohmann::ordered_json;

ordered_json base_report(const GraphClass& cls, const std::string& command,
                         const RunConfig& cfg) {
  ordered_json j;
  j["schema"] = "bendix/1";
  j["command"] = command;
  j["objective"] = cfg.objective;
  j["class"] = graph_class_name(cls.kind);
  j["linear"] = cls.linear;
  if (cfg.budget) j["budget"] = *cfg.budget;
  if (cfg.objective == "zero" || cfg.objective == "curve" || cfg.objective == "lexvec")
    j["planar"] = cfg.planar;
  return j;
}

void put_bends(ordered_json& j, const PathSupport& s, const BendReport& rep) {
  j["total_bends"] = rep.total;
  j["curve_complexity"] = rep.curve;
  j["bend_vector"] = rep.vector.counts;
  ordered_json per = ordered_json::object();
  for (int p = 0; p < s.path_count(); ++p) per[s.path(p).id] = rep.per_path[p];
  j["per_path_bends"] = per;
}

// drawing for a cactus alignment: split paths at their bends, merge shared
// edges, realize the resulting straight-line instance
Drawing cactus_alignment_drawing(const PathSupport& s, const Alignment& alignment, bool planar) {
  SplitPlan plan;
  plan.per_path_bends.assign(s.path_count(), 0);
  for (int p = 0; p < s.path_count(); ++p) {
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    std::vector<int> frag{verts[0]};
    int k = 0;
    for (size_t i = 1; i < verts.size(); ++i) {
      frag.push_back(verts[i]);
      bool cut = i + 1 < verts.size() && !alignment.aligned(es[i - 1], es[i]);
      if (cut || i + 1 == verts.size()) {
        Path f;
        f.id = s.path(p).id + "." + std::to_string(k++);
        f.verts = frag;
        plan.split_paths.push_back(std::move(f));
        plan.fragment_of.push_back(p);
        frag = {verts[i]};
      }
    }
  }
  PathSupport split = split_support(s, plan);
  MergedPathSet merged = merge_shared(split);
  if (!merged.all_paths)
    throw Error(Errc::Infeasible, "internal: split instance does not merge into paths");
  PathSupport ms = merged_support(split, merged);
  Drawing d = realize_linear_cactus(ms, planar);
  return d;  // same vertex set and order as s
}

}  // namespace

RunOutcome run_solve(const PathSupport& s, const RunConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  GraphClass cls = validate(s);
  RunOutcome out;
  out.report = base_report(cls, "solve", cfg);
  ordered_json& j = out.report;

  if (cfg.objective == "total") {
    if (cls.kind == GraphClass::Tree) {
      auto r = minimize_total_bends(s);
      BendReport rep = count_bends(s, r.alignment);
      j["status"] = "optimal";
      j["optimum"] = r.total;
      put_bends(j, s, rep);
      j["alignment"] = alignment_to_json(s, r.alignment);
      out.drawing = realize_tree(s, r.alignment);
    } else if (cls.kind == GraphClass::Cactus && cls.linear) {
      auto plan = min_split_zero_drawing_plan(s);
      j["status"] = "optimal";
      j["optimum"] = static_cast<long long>(plan.splits.size());
      j["total_bends"] = static_cast<long long>(plan.splits.size());
      ordered_json per = ordered_json::object();
      int curve = 0;
      for (int p = 0; p < s.path_count(); ++p) {
        per[s.path(p).id] = plan.per_path_bends[p];
        curve = std::max(curve, plan.per_path_bends[p]);
      }
      j["per_path_bends"] = per;
      j["curve_complexity"] = curve;
      j["bend_vector"] = BendVector::from_bends(plan.per_path_bends).counts;
      ordered_json splits = ordered_json::array();
      for (auto [p, v] : plan.splits) splits.push_back({s.path(p).id, s.vertex_name(v)});
      j["splits"] = splits;
      PathSupport split = split_support(s, plan);
      MergedPathSet merged = merge_shared(split);
      out.drawing = realize_linear_cactus(merged_support(split, merged), true);
    } else {
      throw Error(Errc::BadInput,
                  "total-bend minimization supports tree and linear cactus supports");
    }
  } else if (cfg.objective == "curve") {
    DpResult r;
    bool tree = cls.kind == GraphClass::Tree;
    if (!tree && cls.kind != GraphClass::Cactus)
      throw Error(Errc::BadInput, "curve complexity supports tree and cactus supports");
    if (cfg.budget) {
      if (tree && *cfg.budget <= 1 && !cfg.planar) {
        auto a = curve_complexity_le(s, *cfg.budget);
        if (a) {
          r.feasible = true;
          r.alignment = *a;
          r.curve = count_bends(s, *a).curve;
        }
      } else {
        r = tree && !cfg.planar ? dp_curve_complexity(s, *cfg.budget)
                                : dp_cactus_curve(s, *cfg.budget, cfg.planar);
      }
    } else {
      r = tree && !cfg.planar ? dp_curve_complexity_opt(s) : dp_cactus_curve_opt(s, cfg.planar);
    }
    if (!r.feasible) {
      j["status"] = "infeasible";
      out.exit_code = 1;
    } else {
      j["status"] = cfg.budget ? "feasible" : "optimal";
      j["optimum"] = r.curve;
      BendReport rep = count_bends(s, r.alignment);
      put_bends(j, s, rep);
      j["alignment"] = alignment_to_json(s, r.alignment);
      out.drawing = tree ? realize_tree(s, r.alignment)
                         : cactus_alignment_drawing(s, r.alignment, cfg.planar);
    }
  } else if (cfg.objective == "lexvec") {
    if (cls.kind != GraphClass::Tree && cls.kind != GraphClass::Cactus)
      throw Error(Errc::BadInput, "bend vectors support tree and cactus supports");
    bool tree = cls.kind == GraphClass::Tree;
    DpResult r;
    try {
      r = tree && !cfg.planar ? dp_lex_bend_vector(s, cfg.budget)
                              : dp_cactus_lex(s, cfg.budget, cfg.planar);
    } catch (const Error& e) {
      if (e.code() != Errc::Infeasible) throw;
      j["status"] = "infeasible";
      out.exit_code = 1;
    }
    if (r.feasible) {
      j["status"] = "optimal";
      j["optimum"] = r.vector.counts;
      BendReport rep = count_bends(s, r.alignment);
      put_bends(j, s, rep);
      j["alignment"] = alignment_to_json(s, r.alignment);
      out.drawing = tree ? realize_tree(s, r.alignment)
                         : cactus_alignment_drawing(s, r.alignment, cfg.planar);
    }
  } else if (cfg.objective == "zero") {
    if (cls.kind != GraphClass::Tree && cls.kind != GraphClass::Cactus)
      throw Error(Errc::BadInput, "the zero test supports tree and cactus supports");
    bool zero = zero_curve_complexity(s, cfg.planar);
    j["status"] = zero ? "feasible" : "infeasible";
    j["optimum"] = zero;
    if (zero) {
      MergedPathSet merged = merge_shared(s);
      out.drawing = realize_linear_cactus(merged_support(s, merged), cfg.planar);
      BendReport rep;
      rep.per_path.assign(s.path_count(), 0);
      rep.vector = BendVector::from_bends(rep.per_path);
      put_bends(j, s, rep);
    } else {
      out.exit_code = 1;
    }
  } else if (cfg.objective == "ortho") {
    auto net = build_flow_network(s);
    auto flow = min_cost_flow(net);
    if (!flow.feasible) throw Error(Errc::Infeasible, "flow network infeasible");
    auto [rep, bends] = extract_representation(s, net, flow);
    j["status"] = "optimal";
    j["optimum"] = bends.total;
    j["total_bends"] = bends.total;
    j["flow_cost"] = bends.flow_cost;
    j["degree4_bends"] = bends.degree4_constant;
    int curve = 0;
    ordered_json per = ordered_json::object();
    for (int p = 0; p < s.path_count(); ++p) {
      per[s.path(p).id] = bends.per_path[p];
      curve = std::max(curve, bends.per_path[p]);
    }
    j["per_path_bends"] = per;
    j["curve_complexity"] = curve;
    j["bend_vector"] = BendVector::from_bends(bends.per_path).counts;
    auto drawing = compact(s, rep);
    out.drawing = from_ortho(s, drawing);
  } else {
    throw Error(Errc::BadInput, "unknown objective '" + cfg.objective + "'");
  }

  if (cfg.timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    out.report["wall_time_ms"] = ms.count();
  }
  return out;
}

RunOutcome run_oracle(const PathSupport& s, const RunConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  GraphClass cls = validate(s);
  RunOutcome out;
  out.report = base_report(cls, "oracle", cfg);
  ordered_json& j = out.report;

  OracleOptions opt;
  opt.budget = cfg.budget;
  opt.planar = cfg.planar;
  opt.branch_and_bound = cfg.bnb;
  opt.max_vertices = cfg.oracle_max_vertices;
  opt.max_paths = cfg.oracle_max_paths;
  opt.wall_limit_sec = cfg.wall_limit_sec;

  OracleObjective objective;
  if (cfg.objective == "total")
    objective = OracleObjective::Total;
  else if (cfg.objective == "curve")
    objective = OracleObjective::Curve;
  else if (cfg.objective == "lexvec")
    objective = OracleObjective::LexVector;
  else if (cfg.objective == "focus") {
    objective = OracleObjective::FocusPath;
    for (int p = 0; p < s.path_count(); ++p)
      if (s.path(p).id == cfg.focus_path) opt.focus_path = p;
    if (opt.focus_path < 0) throw Error(Errc::BadInput, "unknown focus path id");
  } else {
    throw Error(Errc::BadInput, "oracle objectives: total, curve, lexvec, focus");
  }

  OracleResult r = oracle_solve(s, objective, opt);
  if (!r.feasible) {
    j["status"] = "infeasible";
    out.exit_code = 1;
  } else {
    j["status"] = "optimal";
    if (cfg.objective == "total") j["optimum"] = r.total;
    if (cfg.objective == "curve") j["optimum"] = r.curve;
    if (cfg.objective == "lexvec") j["optimum"] = r.vector.counts;
    if (cfg.objective == "focus") j["optimum"] = r.focus_bends;
    BendReport rep = count_bends(s, r.witness);
    put_bends(j, s, rep);
    j["alignment"] = alignment_to_json(s, r.witness);
    j["enumerated"] = r.enumerated;
  }
  if (cfg.timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    out.report["wall_time_ms"] = ms.count();
  }
  return out;
}

}  // namespace bendix
