#include "nodedom/agm.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "nodedom/rng.hpp"

namespace nodedom {

namespace {

void validate(const AgmSpec& spec) {
  for (const auto& c : spec.communities) {
    if (c.p < 0.0 || c.p > 1.0) throw std::invalid_argument("community probability outside [0,1]");
    for (NodeIndex v : c.members) {
      if (v >= spec.node_count) throw std::invalid_argument("community member out of range");
    }
  }
  if (spec.epsilon && (*spec.epsilon < 0.0 || *spec.epsilon > 1.0)) {
    throw std::invalid_argument("epsilon outside [0,1]");
  }
}

// Sorted community-ID list per node.
std::vector<std::vector<std::uint32_t>> memberships(const AgmSpec& spec) {
  std::vector<std::vector<std::uint32_t>> of_node(spec.node_count);
  for (std::uint32_t c = 0; c < spec.communities.size(); ++c) {
    for (NodeIndex v : spec.communities[c].members) of_node[v].push_back(c);
  }
  for (auto& list : of_node) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return of_node;
}

// Edge probability for a pair from its shared communities; no_shared is set
// when the pair shares none (caller substitutes epsilon).
double shared_probability(const AgmSpec& spec, const std::vector<std::uint32_t>& cu,
                          const std::vector<std::uint32_t>& cv, bool& no_shared) {
  double stay_apart = 1.0;
  bool any = false;
  std::size_t i = 0, j = 0;
  while (i < cu.size() && j < cv.size()) {
    if (cu[i] == cv[j]) {
      stay_apart *= 1.0 - spec.communities[cu[i]].p;
      any = true;
      ++i;
      ++j;
    } else if (cu[i] < cv[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  no_shared = !any;
  return 1.0 - stay_apart;
}

double resolve_epsilon(const AgmSpec& spec, const std::vector<std::vector<std::uint32_t>>& of_node,
                       double& expected_community_edges) {
  expected_community_edges = 0.0;
  for (NodeIndex u = 0; u < spec.node_count; ++u) {
    for (NodeIndex v = u + 1; v < spec.node_count; ++v) {
      bool no_shared = false;
      const double p = shared_probability(spec, of_node[u], of_node[v], no_shared);
      if (!no_shared) expected_community_edges += p;
    }
  }
  if (spec.epsilon) return *spec.epsilon;
  const double n = static_cast<double>(spec.node_count);
  if (spec.node_count < 2) return 0.0;
  return 2.0 * expected_community_edges / (n * (n - 1.0));
}

}  // namespace

AgmSample generate(const AgmSpec& spec) {
  validate(spec);
  const auto of_node = memberships(spec);

  AgmSample sample;
  sample.realized_epsilon = resolve_epsilon(spec, of_node, sample.expected_community_edges);

  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (NodeIndex u = 0; u < spec.node_count; ++u) {
    for (NodeIndex v = u + 1; v < spec.node_count; ++v) {
      bool no_shared = false;
      double p = shared_probability(spec, of_node[u], of_node[v], no_shared);
      if (no_shared) p = sample.realized_epsilon;
      if (uniform_real(rng) < p) edges.emplace_back(u, v);
    }
  }
  sample.graph = Graph::from_index_edges(spec.node_count, edges);

  sample.truth.name = "agm-truth";
  sample.truth.ground_truth = true;
  for (const auto& c : spec.communities) {
    std::vector<NodeIndex> members = c.members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    sample.truth.sets.push_back(std::move(members));
  }
  return sample;
}

Property3Report property3_test(const AgmSpec& spec, std::uint32_t trials) {
  validate(spec);
  if (trials < 100) throw std::invalid_argument("property3_test needs trials >= 100");

  double min_p = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.communities) min_p = std::min(min_p, c.p);
  if (spec.communities.empty()) throw std::invalid_argument("property3_test needs communities");

  const auto of_node = memberships(spec);
  double expected = 0.0;
  const double eps = resolve_epsilon(spec, of_node, expected);
  if (eps > min_p / 10.0) {
    throw std::invalid_argument("property3_test requires epsilon <= min(p_c) / 10");
  }

  Property3Report report;
  report.trials = trials;

  for (std::uint32_t t = 0; t < trials; ++t) {
    AgmSpec trial = spec;
    trial.epsilon = eps;
    trial.seed = spec.seed + t;
    const AgmSample sample = generate(trial);
    const Graph& g = sample.graph;

    std::vector<std::vector<NodeIndex>> closed(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      closed[v] = closed_neighborhood(g, v).members;
    }

    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      // Community labels of the whole neighborhood set.
      std::vector<std::uint32_t> labels;
      for (NodeIndex u : closed[v]) {
        labels.insert(labels.end(), of_node[u].begin(), of_node[u].end());
      }
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

      for (NodeIndex w = 0; w < g.node_count(); ++w) {
        if (w == v) continue;
        const bool label_subset =
            std::includes(of_node[w].begin(), of_node[w].end(), labels.begin(), labels.end());
        const bool dominated = sorted_subset(closed[v], closed[w]);
        if (label_subset) {
          ++report.subset_pairs;
          report.subset_dominations += dominated ? 1 : 0;
        } else {
          ++report.other_pairs;
          report.other_dominations += dominated ? 1 : 0;
        }
      }
    }
  }

  if (report.subset_pairs > 0) {
    report.subset_frequency = static_cast<double>(report.subset_dominations) /
                              static_cast<double>(report.subset_pairs);
  }
  if (report.other_pairs > 0) {
    report.other_frequency = static_cast<double>(report.other_dominations) /
                             static_cast<double>(report.other_pairs);
  }
  return report;
}

}  // namespace nodedom
