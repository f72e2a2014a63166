#pragma once

#include <cstdint>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

/// Connected component of the periphery-induced subgraph.
struct PeripheralComponent {
  std::uint32_t id = 0;
  std::vector<NodeIndex> members;  // sorted, all in periphery
};

/// Peripheral component plus every core node adjacent to it.
struct ExtendedComponent {
  std::uint32_t base = 0;  // PeripheralComponent id
  std::vector<NodeIndex> members;  // sorted
};

/// Union of all extended components containing the anchor core node.
struct CandidateSet {
  NodeIndex anchor = 0;  // provenance only
  std::vector<NodeIndex> members;  // sorted
};

struct CandidateSetResult {
  /// Maximal candidate sets (no duplicates, no subset pairs), ordered by
  /// smallest member external ID, then size.
  std::vector<CandidateSet> sets;
  /// Core nodes adjacent to no periphery node; they appear in no candidate
  /// set and are surfaced separately.
  std::vector<NodeIndex> interior_core;
};

std::vector<PeripheralComponent> peripheral_components(const Graph& g, const CollapseResult& cr);

std::vector<ExtendedComponent> extend_components(const Graph& g, const CollapseResult& cr,
                                                 const std::vector<PeripheralComponent>& pcs);

CandidateSetResult candidate_sets(const Graph& g, const CollapseResult& cr,
                                  const std::vector<ExtendedComponent>& extended);

}  // namespace nodedom
