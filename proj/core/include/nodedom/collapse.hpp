#pragma once

#include <cstdint>
#include <vector>

#include "nodedom/graph.hpp"

namespace nodedom {

enum class VariantKind { OneHop, TwoHop, Relation };

/// Which neighborhood a dominance check compares: closed 1-hop sets, closed
/// 2-hop sets, or per-node maximal-simplex lists supplied by a relation.
struct DominanceVariant {
  VariantKind kind = VariantKind::OneHop;
  /// Relation variant only: sorted simplex-ID list per node (empty lists are
  /// allowed; such nodes neither dominate nor get dominated).
  std::vector<std::vector<std::uint32_t>> relation_lists;

  static DominanceVariant one_hop() { return {VariantKind::OneHop, {}}; }
  static DominanceVariant two_hop() { return {VariantKind::TwoHop, {}}; }
  static DominanceVariant relation(std::vector<std::vector<std::uint32_t>> lists);
};

/// Resolves which of two mutually dominating nodes survives a handshake.
/// Deterministic mode keeps the smaller external ID; seeded mode flips a
/// coin per handshake event, events ordered canonically by ID pair.
struct TieBreakPolicy {
  bool seeded = false;
  std::uint64_t seed = 0;

  static TieBreakPolicy deterministic() { return {}; }
  static TieBreakPolicy with_seed(std::uint64_t s) { return {true, s}; }
};

struct RemovalEntry {
  NodeIndex removed = 0;
  NodeIndex dominator = 0;
  std::uint32_t iteration = 0;  // 1-based scan pass
};

struct CollapseResult {
  std::vector<NodeIndex> core;           // sorted by internal index
  std::vector<NodeIndex> periphery;      // sorted by internal index
  std::vector<std::uint8_t> core_mask;   // size node_count
  std::vector<RemovalEntry> removal_log;
  VariantKind variant = VariantKind::OneHop;
  TieBreakPolicy policy;
};

/// Dominance test on the graph as given (no residual state). For the 1-/2-hop
/// variants a non-neighbor w can never dominate, so the check returns false;
/// the relation variant additionally requires a shared simplex. v == w is an
/// argument error.
bool is_dominated(const Graph& g, NodeIndex v, NodeIndex w, const DominanceVariant& variant);

/// Iterative dominated-node removal to a fixed point. Nodes are scanned in
/// ascending external-ID order; removals apply immediately, so later checks
/// in the same pass see the residual graph. Neighborhoods are re-evaluated
/// on the residual graph throughout.
CollapseResult collapse(const Graph& g, const DominanceVariant& variant,
                        const TieBreakPolicy& policy = TieBreakPolicy::deterministic());

struct StabilityReport {
  std::uint32_t realizations = 0;
  std::uint64_t base_seed = 0;
  VariantKind variant = VariantKind::OneHop;
  std::vector<NodeIndex> always_core;  // in core on every realization
  std::vector<NodeIndex> ever_core;    // in core on at least one
  std::vector<double> core_frequency;  // per node
  std::uint32_t core_size_min = 0;     // all cores are isomorphic, so min and
  std::uint32_t core_size_max = 0;     // max diverging would signal a bug
};

/// Randomized-order collapse repeated `realizations` times: each step picks
/// uniformly among currently dominated nodes (realization r is seeded with
/// base_seed + r) and membership frequencies are aggregated. Results do not
/// depend on the thread count.
StabilityReport stability_analysis(const Graph& g, const DominanceVariant& variant,
                                   std::uint32_t realizations, std::uint64_t base_seed,
                                   unsigned threads = 1);

}  // namespace nodedom
