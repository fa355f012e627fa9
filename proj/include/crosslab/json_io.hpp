#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crosslab/bisection.hpp"
#include "crosslab/crossing_number.hpp"
#include "crosslab/decomposition.hpp"
#include "crosslab/graph.hpp"
#include "crosslab/rational.hpp"

namespace crosslab {

// ordered_json keeps insertion order, so identical values serialize to
// identical bytes
using Json = nlohmann::ordered_json;

inline Json edges_to_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const auto& [u, v] : edges) arr.push_back(Json::array({u, v}));
  return arr;
}

inline std::vector<Edge> edges_from_json(const Json& arr) {
  std::vector<Edge> edges;
  for (const auto& e : arr)
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return edges;
}

inline Json bisection_to_json(const Bisection& b) {
  Json j;
  j["width"] = b.width;
  j["part_one"] = b.part_one.members;
  j["part_two"] = b.part_two.members;
  j["exactness"] = to_string(b.exactness);
  return j;
}

inline Json crossing_result_to_json(const CrossingResult& r) {
  Json j;
  if (r.value)
    j["value"] = *r.value;
  else
    j["value"] = "exceeds k_max";
  if (r.certificate) {
    const auto& cert = *r.certificate;
    Json pairs = Json::array();
    for (auto [a, b] : cert.crossing_pairs) {
      const auto& ea = cert.base.edges()[a];
      const auto& eb = cert.base.edges()[b];
      Json c;
      c["edge_a"] = Json::array({ea.first, ea.second});
      c["edge_b"] = Json::array({eb.first, eb.second});
      pairs.push_back(c);
    }
    Json cj;
    cj["crossings"] = pairs;
    cj["derived_graph"] = {{"n", cert.derived_graph.vertex_count()},
                           {"edges", edges_to_json(cert.derived_graph.edges())}};
    j["certificate"] = cj;
  } else {
    j["certificate"] = nullptr;
  }
  j["stats"] = {{"planarity_tests", r.stats.planarity_tests},
                {"candidates", r.stats.candidates}};
  return j;
}

// ---------------------------------------------------------------------------
// Decomposition trace <-> JSON. The file carries the split graph, every
// per-level bisection and the preimages, so verification can re-run from the
// file alone.
// ---------------------------------------------------------------------------

inline Json trace_to_json(const DecompositionTrace& trace) {
  const SplitResult& split = trace.split;
  Json j;
  Json js;
  js["n"] = split.original.vertex_count();
  js["e"] = split.original.edge_count();
  js["N"] = split.split_graph.vertex_count();
  js["d_bar"] = split.d_bar();
  js["d_bar_exact"] =
      std::to_string(split.dbar_num) + "/" + std::to_string(split.dbar_den);
  js["groups"] = split.groups;
  js["origin_of"] = split.origin_of;
  js["assigned_neighbors"] = split.assigned_neighbors;
  js["original_edges"] = edges_to_json(split.original.edges());
  js["split_edges"] = edges_to_json(split.split_graph.edges());
  j["split"] = js;
  j["params"] = {{"A", trace.params.A},
                 {"alpha", trace.params.alpha},
                 {"c", trace.params.c},
                 {"c_prime", trace.params.c_prime}};
  Json levels = Json::array();
  for (const auto& lv : trace.levels) {
    Json jl;
    jl["i"] = lv.index;
    jl["M_i"] = lv.component_count;
    jl["m_i"] = lv.large_count;
    Json comps = Json::array();
    for (const auto& c : lv.components)
      comps.push_back({{"n", c.n}, {"e", c.e}, {"ids", c.ids}});
    jl["components"] = comps;
    jl["deleted"] = lv.deleted;
    Json bis = Json::array();
    for (const auto& b : lv.bisections) {
      Json jb;
      jb["j"] = b.component;
      jb["width"] = b.width;
      jb["exactness"] = to_string(b.exactness);
      jb["part_one"] = b.part_one;
      jb["part_two"] = b.part_two;
      jb["cut_edges"] = edges_to_json(b.cut_edges);
      bis.push_back(jb);
    }
    jl["bisections"] = bis;
    levels.push_back(jl);
  }
  j["levels"] = levels;
  j["k"] = trace.stopping;
  j["sigma"] = trace.sigma;
  j["final_edge_count"] = trace.final_edge_count;
  Json pre = Json::array();
  for (const auto& p : trace.preimages)
    pre.push_back({{"j", p.component},
                   {"V", p.original_ids},
                   {"induced_edges", p.induced_edge_count}});
  j["preimages"] = pre;
  j["flags"] = {{"k_zero", trace.k_zero_flagged},
                {"diagnostics", trace.diagnostics},
                {"policy", trace.policy == BisectorPolicy::ExactOnly
                               ? "exact"
                               : "auto"}};
  return j;
}

inline DecompositionTrace trace_from_json(const Json& j) {
  DecompositionTrace trace;
  const Json& js = j.at("split");
  trace.split.original = Graph(js.at("n").get<int>(),
                               edges_from_json(js.at("original_edges")));
  trace.split.split_graph =
      Graph(js.at("N").get<int>(), edges_from_json(js.at("split_edges")));
  {
    std::string exact = js.at("d_bar_exact").get<std::string>();
    auto slash = exact.find('/');
    trace.split.dbar_num = std::stoll(exact.substr(0, slash));
    trace.split.dbar_den = std::stoll(exact.substr(slash + 1));
  }
  trace.split.groups = js.at("groups").get<std::vector<std::vector<int>>>();
  trace.split.origin_of = js.at("origin_of").get<std::vector<int>>();
  trace.split.assigned_neighbors =
      js.at("assigned_neighbors").get<std::vector<std::vector<int>>>();
  trace.params = theorem2_constants(j.at("params").at("A").get<double>(),
                                    j.at("params").at("alpha").get<double>());
  for (const auto& jl : j.at("levels")) {
    LevelRecord lv;
    lv.index = jl.at("i").get<int>();
    lv.component_count = jl.at("M_i").get<int>();
    lv.large_count = jl.at("m_i").get<int>();
    for (const auto& jc : jl.at("components")) {
      ComponentSummary c;
      c.n = jc.at("n").get<int>();
      c.e = jc.at("e").get<long long>();
      c.ids = jc.at("ids").get<std::vector<int>>();
      lv.components.push_back(std::move(c));
    }
    lv.deleted = jl.at("deleted").get<long long>();
    for (const auto& jb : jl.at("bisections")) {
      BisectionRecord b;
      b.component = jb.at("j").get<int>();
      b.width = jb.at("width").get<int>();
      b.exactness = jb.at("exactness").get<std::string>() == "exact"
                        ? Exactness::Exact
                        : Exactness::HeuristicUpperBound;
      b.part_one = jb.at("part_one").get<std::vector<int>>();
      b.part_two = jb.at("part_two").get<std::vector<int>>();
      b.cut_edges = edges_from_json(jb.at("cut_edges"));
      lv.bisections.push_back(std::move(b));
    }
    trace.levels.push_back(std::move(lv));
  }
  trace.stopping = j.at("k").get<int>();
  trace.sigma = j.at("sigma").get<long long>();
  trace.final_edge_count = j.at("final_edge_count").get<long long>();
  for (const auto& jp : j.at("preimages")) {
    PreimageRecord p;
    p.component = jp.at("j").get<int>();
    p.original_ids = jp.at("V").get<std::vector<int>>();
    p.induced_edge_count = jp.at("induced_edges").get<long long>();
    trace.preimages.push_back(std::move(p));
  }
  trace.k_zero_flagged = j.at("flags").at("k_zero").get<bool>();
  trace.diagnostics = j.at("flags").at("diagnostics").get<std::string>();
  trace.policy = j.at("flags").at("policy").get<std::string>() == "exact"
                     ? BisectorPolicy::ExactOnly
                     : BisectorPolicy::Auto;
  return trace;
}

}  // namespace crosslab
