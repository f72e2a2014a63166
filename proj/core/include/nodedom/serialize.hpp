#pragma once

#include <json.hpp>

#include "nodedom/agm.hpp"
#include "nodedom/collapse.hpp"
#include "nodedom/communities.hpp"
#include "nodedom/distributed.hpp"
#include "nodedom/evaluation.hpp"
#include "nodedom/graph.hpp"
#include "nodedom/topology.hpp"

namespace nodedom {

// JSON views of the report structs (external IDs, never internal indices).

nlohmann::json to_json(const Graph& g, const DescriptiveStats& s);
nlohmann::json to_json(const MatchReport& r);
nlohmann::json to_json(const MembershipProfile& p);
nlohmann::json to_json(const PathShareReport& r);
nlohmann::json to_json(const Graph& g, const SimTrace& trace);
nlohmann::json to_json(const Graph& g, const StabilityReport& report);
nlohmann::json to_json(const HomologyCheck& check);
nlohmann::json to_json(const Property3Report& report);

const char* variant_name(VariantKind kind);

/// Parses an AgmSpec from its JSON form:
/// {"node_count": N, "seed": S, "epsilon": 0.01 | "auto",
///  "communities": [{"members": [..indices..], "p": 0.9}, ...]}
AgmSpec agm_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AgmSpec& spec);

}  // namespace nodedom
