#include "nodedom/distributed.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "dominance_detail.hpp"
#include "nodedom/rng.hpp"

namespace nodedom {

using detail::RelationIndex;
using detail::Residual;

namespace {

void check_relation_lists(const Graph& g, const DominanceVariant& variant) {
  if (variant.kind == VariantKind::Relation &&
      variant.relation_lists.size() != g.node_count()) {
    throw std::invalid_argument("relation variant needs a simplex list for every node");
  }
}

// Round-start snapshot of the closed 2-hop sets (the 1-hop and relation
// variants read the residual state directly; it only mutates at round end).
struct Snapshot {
  std::vector<std::vector<NodeIndex>> two_hop;
};

}  // namespace

SimTrace simulate(const Graph& g, const DominanceVariant& variant, const TieBreakPolicy& policy,
                  const DeliveryPolicy& delivery) {
  check_relation_lists(g, variant);
  const NodeIndex n = g.node_count();

  SimTrace trace;
  trace.final_partition.variant = variant.kind;
  trace.final_partition.policy = policy;
  trace.final_partition.core_mask.assign(n, 1);
  if (n == 0) return trace;

  Residual res(g);
  RelationIndex relation_index;
  if (variant.kind == VariantKind::Relation) relation_index = RelationIndex(variant.relation_lists);
  detail::HandshakeResolver handshake(g, policy);
  std::mt19937_64 shuffle_rng(delivery.seed);

  std::vector<NodeIndex> active(g.nodes_by_rank().begin(), g.nodes_by_rank().end());

  // v dominates u (so v would send OFF to u) against the snapshot.
  auto dominates = [&](const Snapshot& snap, NodeIndex v, NodeIndex u) -> bool {
    switch (variant.kind) {
      case VariantKind::OneHop:
        return res.closed_subset(u, v);
      case VariantKind::TwoHop: {
        const auto& nu = snap.two_hop[u];
        const auto& nv = snap.two_hop[v];
        return nu.size() <= nv.size() && sorted_subset(nu, nv);
      }
      case VariantKind::Relation: {
        const auto& lu = variant.relation_lists[u];
        const auto& lv = variant.relation_lists[v];
        return !lu.empty() && detail::list_subset(lu, lv);
      }
    }
    return false;
  };

  auto peers_of = [&](NodeIndex v) -> std::vector<NodeIndex> {
    if (variant.kind == VariantKind::Relation) {
      return relation_index.peers(v, variant.relation_lists[v], res);
    }
    if (variant.kind == VariantKind::TwoHop) {
      auto out = res.two_hop(v);
      out.erase(std::remove(out.begin(), out.end(), v), out.end());
      return out;
    }
    return {res.adj(v).begin(), res.adj(v).end()};
  };

  for (;;) {
    ++trace.rounds;

    Snapshot snap;
    if (variant.kind == VariantKind::TwoHop) {
      snap.two_hop.resize(n);
      for (NodeIndex v : active) snap.two_hop[v] = res.two_hop(v);
    }

    // Broadcast accounting: one message per (active node, active neighbor).
    for (NodeIndex v : active) {
      trace.broadcast_messages += variant.kind == VariantKind::Relation
                                      ? relation_index.peers(v, variant.relation_lists[v], res).size()
                                      : res.adj(v).size();
    }

    std::vector<NodeIndex> order = active;
    if (delivery.shuffle) nodedom::shuffle(order, shuffle_rng);

    // Key (min,max) -> direction bits: 1 = smaller index dominates larger.
    std::unordered_map<std::uint64_t, std::uint8_t> off_edges;
    for (NodeIndex v : order) {
      for (NodeIndex u : peers_of(v)) {
        if (!dominates(snap, v, u)) continue;
        ++trace.off_messages;
        const NodeIndex lo = std::min(u, v), hi = std::max(u, v);
        const std::uint64_t key = static_cast<std::uint64_t>(lo) * n + hi;
        off_edges[key] |= (v == lo) ? 1 : 2;
      }
    }

    std::vector<std::uint8_t> off_now(n, 0);
    std::vector<std::pair<NodeIndex, NodeIndex>> mutual;  // (lo, hi)
    std::vector<std::pair<NodeIndex, NodeIndex>> one_sided;  // (receiver, sender)
    for (const auto& [key, bits] : off_edges) {
      const NodeIndex lo = static_cast<NodeIndex>(key / n);
      const NodeIndex hi = static_cast<NodeIndex>(key % n);
      if (bits == 3) {
        mutual.emplace_back(lo, hi);
      } else if (bits == 1) {
        one_sided.emplace_back(hi, lo);
      } else {
        one_sided.emplace_back(lo, hi);
      }
    }

    // One-sided OFF receivers turn off unconditionally; remember the
    // smallest-rank sender as the logged dominator.
    std::vector<NodeIndex> dominator(n, n);
    std::sort(one_sided.begin(), one_sided.end(), [&](const auto& a, const auto& b) {
      return std::pair(g.id_rank(a.first), g.id_rank(a.second)) <
             std::pair(g.id_rank(b.first), g.id_rank(b.second));
    });
    for (const auto& [receiver, sender] : one_sided) {
      off_now[receiver] = 1;
      if (dominator[receiver] == n) dominator[receiver] = sender;
    }

    // Mutual pairs handshake in canonical pair order; exactly one of the
    // pair is designated OFF (it may already be off via a one-sided OFF).
    std::sort(mutual.begin(), mutual.end(), [&](const auto& a, const auto& b) {
      const auto ka = std::minmax(g.id_rank(a.first), g.id_rank(a.second));
      const auto kb = std::minmax(g.id_rank(b.first), g.id_rank(b.second));
      return ka < kb;
    });
    for (const auto& [lo, hi] : mutual) {
      ++trace.handshake_events;
      const NodeIndex loser = handshake.loser(lo, hi);
      off_now[loser] = 1;
      if (dominator[loser] == n) dominator[loser] = loser == lo ? hi : lo;
    }

    std::vector<NodeIndex> removed;
    for (NodeIndex v : g.nodes_by_rank()) {
      if (off_now[v]) removed.push_back(v);
    }
    if (removed.empty()) break;

    for (NodeIndex r : removed) {
      res.remove(r);
      trace.final_partition.core_mask[r] = 0;
      trace.final_partition.removal_log.push_back({r, dominator[r], trace.rounds});
    }
    trace.removed_by_round.push_back(removed);

    std::vector<NodeIndex> still_active;
    still_active.reserve(active.size());
    for (NodeIndex v : active) {
      if (res.alive(v)) still_active.push_back(v);
    }
    active = std::move(still_active);
  }

  for (NodeIndex v = 0; v < n; ++v) {
    auto& part = trace.final_partition;
    (part.core_mask[v] ? part.core : part.periphery).push_back(v);
  }
  return trace;
}

bool cross_validate(const Graph& g, const DominanceVariant& variant,
                    const TieBreakPolicy& policy) {
  if (policy.seeded) {
    throw std::invalid_argument("cross_validate requires the deterministic tie-break policy");
  }
  const SimTrace trace = simulate(g, variant, policy);
  const CollapseResult sequential = collapse(g, variant, policy);
  return trace.final_partition.core == sequential.core;
}

}  // namespace nodedom
