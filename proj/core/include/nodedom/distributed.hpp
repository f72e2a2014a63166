#pragma once

#include <cstdint>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

/// How within-round message processing is ordered. Lockstep is the reference
/// semantics; SeededShuffle permutes processing order only, which must not
/// change the outcome (rounds act on a start-of-round snapshot).
struct DeliveryPolicy {
  bool shuffle = false;
  std::uint64_t seed = 0;

  static DeliveryPolicy lockstep() { return {}; }
  static DeliveryPolicy shuffled(std::uint64_t s) { return {true, s}; }
};

struct SimTrace {
  std::uint32_t rounds = 0;
  std::uint64_t broadcast_messages = 0;
  std::uint64_t off_messages = 0;
  std::uint64_t handshake_events = 0;
  std::vector<std::vector<NodeIndex>> removed_by_round;
  CollapseResult final_partition;
};

/// Discrete-round simulation of the distributed dominance protocol. Each
/// round: active nodes broadcast their neighbor sets, every node sends OFF
/// to the neighbors it dominates (tested against the round-start snapshot),
/// mutual-OFF pairs resolve via handshake in canonical pair order, one-sided
/// OFF receivers turn off unconditionally, and off nodes are dropped from
/// all neighbor sets. Terminates on the first round with no OFF messages.
SimTrace simulate(const Graph& g, const DominanceVariant& variant, const TieBreakPolicy& policy,
                  const DeliveryPolicy& delivery = DeliveryPolicy::lockstep());

/// True iff the simulator and the sequential engine produce identical core
/// node sets. Requires a deterministic tie-break policy.
bool cross_validate(const Graph& g, const DominanceVariant& variant,
                    const TieBreakPolicy& policy);

}  // namespace nodedom
