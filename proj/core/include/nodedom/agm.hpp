#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nodedom/evaluation.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

struct AgmCommunity {
  std::vector<NodeIndex> members;  // indices < node_count
  double p = 0.0;                  // per-community edge probability
};

/// Community-affiliation graph model spec. A pair sharing communities gets an
/// edge with probability 1 - prod(1 - p_c); pairs sharing none use epsilon.
/// epsilon == nullopt means "auto": 2 * E[community edges] / (n * (n - 1)),
/// the expected-count analogue of the observed-density baseline.
struct AgmSpec {
  NodeIndex node_count = 0;
  std::vector<AgmCommunity> communities;
  std::optional<double> epsilon = 0.0;
  std::uint64_t seed = 0;
};

struct AgmSample {
  Graph graph;
  CommunitySet truth;
  double realized_epsilon = 0.0;
  double expected_community_edges = 0.0;
};

AgmSample generate(const AgmSpec& spec);

/// Empirical check of the community-domination property: over repeated
/// samples, the frequency of "v dominated by w" conditioned on w carrying
/// all community labels of N[v], versus conditioned on w missing some.
struct Property3Report {
  std::uint64_t subset_pairs = 0;       // pairs with C_N[v] ⊆ C_w
  std::uint64_t subset_dominations = 0;
  std::uint64_t other_pairs = 0;        // pairs with C_N[v] ⊄ C_w
  std::uint64_t other_dominations = 0;
  double subset_frequency = 0.0;
  double other_frequency = 0.0;
  std::uint32_t trials = 0;
};

/// trials >= 100; requires epsilon <= min(p_c) / 10 so the baseline is
/// genuinely negligible. Trial t uses seed spec.seed + t.
Property3Report property3_test(const AgmSpec& spec, std::uint32_t trials);

}  // namespace nodedom
