#include "nodedom/serialize.hpp"

#include <algorithm>

namespace nodedom {

using nlohmann::json;

namespace {

json id_array(const Graph& g, std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> ordered(nodes.begin(), nodes.end());
  std::sort(ordered.begin(), ordered.end(),
            [&](NodeIndex a, NodeIndex b) { return g.id_rank(a) < g.id_rank(b); });
  json arr = json::array();
  for (NodeIndex v : ordered) arr.push_back(g.external_id(v));
  return arr;
}

}  // namespace

const char* variant_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::OneHop: return "1hop";
    case VariantKind::TwoHop: return "2hop";
    case VariantKind::Relation: return "relation";
  }
  return "unknown";
}

json to_json(const Graph& g, const DescriptiveStats& s) {
  (void)g;
  return json{
      {"nodes", {{"core", s.nodes_core}, {"periphery", s.nodes_periphery}, {"total", s.nodes_total}}},
      {"edges",
       {{"within_core", s.edges_core},
        {"within_periphery", s.edges_periphery},
        {"core_periphery", s.edges_cross},
        {"total", s.edges_total}}},
      {"mean_degree",
       {{"entire", s.mean_degree_entire},
        {"core_wrt_entire", s.mean_degree_core_full},
        {"core_wrt_core", s.mean_degree_core_core},
        {"periphery_wrt_entire", s.mean_degree_periphery_full},
        {"periphery_wrt_periphery", s.mean_degree_periphery_periphery}}},
      {"clustering_coefficient",
       {{"entire", s.clustering_entire},
        {"core_wrt_entire", s.clustering_core_full},
        {"core_wrt_core", s.clustering_core_core},
        {"periphery_wrt_entire", s.clustering_periphery_full},
        {"periphery_wrt_periphery", s.clustering_periphery_periphery}}}};
}

namespace {

json side_to_json(const MatchSideReport& side) {
  return json{{"recall", side.avg_recall},
              {"precision", side.avg_precision},
              {"f1", side.avg_f1},
              {"containment", side.containment},
              {"communities", side.communities}};
}

}  // namespace

json to_json(const MatchReport& r) {
  return json{{"ground_truth_side", side_to_json(r.truth_side)},
              {"detected_side", side_to_json(r.detected_side)}};
}

json to_json(const MembershipProfile& p) {
  auto region = [](const MembershipProfile::Region& r) {
    return json{{"nodes", r.nodes},
                {"none", r.none},
                {"single", r.single},
                {"multiple", r.multiple},
                {"mean_labels_among_multiple", r.mean_labels_among_multiple}};
  };
  return json{{"core", region(p.core)}, {"periphery", region(p.periphery)}};
}

json to_json(const PathShareReport& r) {
  return json{{"proportions",
               {{"core", r.core},
                {"highest_bc", r.top_bc},
                {"highest_degree", r.top_degree},
                {"random", r.random_set}}},
              {"pairs", r.pairs},
              {"seed", r.seed},
              {"all_paths", r.all_paths},
              {"sampled_bc", r.sampled_bc},
              {"bc_pivots", r.bc_pivots}};
}

json to_json(const Graph& g, const SimTrace& trace) {
  json rounds = json::array();
  for (const auto& removed : trace.removed_by_round) rounds.push_back(id_array(g, removed));
  return json{{"rounds", trace.rounds},
              {"messages",
               {{"neighbor_broadcast", trace.broadcast_messages},
                {"off", trace.off_messages},
                {"handshake", trace.handshake_events}}},
              {"removed_by_round", rounds},
              {"core", id_array(g, trace.final_partition.core)},
              {"periphery_size", trace.final_partition.periphery.size()},
              {"variant", variant_name(trace.final_partition.variant)}};
}

json to_json(const Graph& g, const StabilityReport& report) {
  return json{{"realizations", report.realizations},
              {"base_seed", report.base_seed},
              {"variant", variant_name(report.variant)},
              {"always_core_size", report.always_core.size()},
              {"ever_core_size", report.ever_core.size()},
              {"core_size_min", report.core_size_min},
              {"core_size_max", report.core_size_max},
              {"always_core", id_array(g, report.always_core)},
              {"ever_core", id_array(g, report.ever_core)}};
}

json to_json(const HomologyCheck& check) {
  return json{{"preserved", check.preserved},
              {"betti_original", check.original.b},
              {"betti_core", check.core.b}};
}

json to_json(const Property3Report& report) {
  json j{{"trials", report.trials},
         {"subset_pairs", report.subset_pairs},
         {"subset_dominations", report.subset_dominations},
         {"subset_frequency", report.subset_frequency},
         {"other_pairs", report.other_pairs},
         {"other_dominations", report.other_dominations},
         {"other_frequency", report.other_frequency}};
  if (report.other_frequency > 0.0) {
    j["frequency_ratio"] = report.subset_frequency / report.other_frequency;
  }
  return j;
}

AgmSpec agm_spec_from_json(const json& j) {
  AgmSpec spec;
  spec.node_count = j.at("node_count").get<NodeIndex>();
  spec.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("epsilon")) {
    const auto& eps = j.at("epsilon");
    if (eps.is_string() && eps.get<std::string>() == "auto") {
      spec.epsilon = std::nullopt;
    } else {
      spec.epsilon = eps.get<double>();
    }
  }
  for (const auto& c : j.at("communities")) {
    AgmCommunity community;
    community.p = c.at("p").get<double>();
    for (const auto& m : c.at("members")) community.members.push_back(m.get<NodeIndex>());
    spec.communities.push_back(std::move(community));
  }
  return spec;
}

json to_json(const AgmSpec& spec) {
  json communities = json::array();
  for (const auto& c : spec.communities) {
    communities.push_back(json{{"members", c.members}, {"p", c.p}});
  }
  json j{{"node_count", spec.node_count}, {"seed", spec.seed}, {"communities", communities}};
  if (spec.epsilon) {
    j["epsilon"] = *spec.epsilon;
  } else {
    j["epsilon"] = "auto";
  }
  return j;
}

}  // namespace nodedom
