#pragma once

// Residual-graph machinery shared by the sequential collapse engine and the
// distributed-protocol simulator. Not installed; internal to the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom::detail {

/// Mutable adjacency under node removals. Neighbor lists stay sorted and
/// contain only alive nodes.
class Residual {
 public:
  explicit Residual(const Graph& g) : g_(&g), alive_(g.node_count(), 1) {
    adj_.resize(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const auto nb = g.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
    }
  }

  const Graph& graph() const { return *g_; }
  bool alive(NodeIndex v) const { return alive_[v] != 0; }
  const std::vector<NodeIndex>& adj(NodeIndex v) const { return adj_[v]; }

  void remove(NodeIndex r) {
    alive_[r] = 0;
    for (NodeIndex u : adj_[r]) {
      auto& au = adj_[u];
      au.erase(std::lower_bound(au.begin(), au.end(), r));
    }
    adj_[r].clear();
    adj_[r].shrink_to_fit();
  }

  std::vector<NodeIndex> alive_nodes_by_rank() const {
    std::vector<NodeIndex> out;
    for (NodeIndex v : g_->nodes_by_rank()) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

  /// Closed 2-hop neighborhood of v in the residual graph, sorted, incl. v.
  std::vector<NodeIndex> two_hop(NodeIndex v) const {
    std::vector<NodeIndex> out;
    out.push_back(v);
    for (NodeIndex u : adj_[v]) {
      out.push_back(u);
      out.insert(out.end(), adj_[u].begin(), adj_[u].end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// N[v] ⊆ N[w] over closed residual neighborhoods; requires v adjacent w.
  bool closed_subset(NodeIndex v, NodeIndex w) const {
    const auto& av = adj_[v];
    const auto& aw = adj_[w];
    if (av.size() > aw.size() + 1) return false;  // w itself is not in aw
    std::size_t j = 0;
    for (NodeIndex u : av) {
      if (u == w) continue;
      while (j < aw.size() && aw[j] < u) ++j;
      if (j == aw.size() || aw[j] != u) return false;
      ++j;
    }
    return true;
  }

  /// Equal closed neighborhoods (mutual domination) for adjacent v, w.
  bool closed_equal(NodeIndex v, NodeIndex w) const {
    return adj_[v].size() == adj_[w].size() && closed_subset(v, w);
  }

 private:
  const Graph* g_;
  std::vector<std::vector<NodeIndex>> adj_;
  std::vector<std::uint8_t> alive_;
};

/// Simplex-ID -> member nodes, for relation-variant candidate lookups.
class RelationIndex {
 public:
  RelationIndex() = default;
  explicit RelationIndex(const std::vector<std::vector<std::uint32_t>>& lists) {
    for (NodeIndex v = 0; v < lists.size(); ++v) {
      for (std::uint32_t s : lists[v]) members_[s].push_back(v);
    }
  }

  /// Alive nodes sharing at least one simplex with v (v excluded), sorted.
  std::vector<NodeIndex> peers(NodeIndex v, const std::vector<std::uint32_t>& list,
                               const Residual& res) const {
    std::vector<NodeIndex> out;
    for (std::uint32_t s : list) {
      auto it = members_.find(s);
      if (it == members_.end()) continue;
      for (NodeIndex u : it->second) {
        if (u != v && res.alive(u)) out.push_back(u);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::unordered_map<std::uint32_t, std::vector<NodeIndex>> members_;
};

inline bool list_subset(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Draws one handshake outcome: returns the node that turns OFF.
class HandshakeResolver {
 public:
  explicit HandshakeResolver(const Graph& g, const TieBreakPolicy& policy)
      : g_(&g), policy_(policy), rng_(policy.seed) {}

  NodeIndex loser(NodeIndex a, NodeIndex b) {
    const bool a_smaller = g_->id_rank(a) < g_->id_rank(b);
    if (!policy_.seeded) return a_smaller ? b : a;
    const bool larger_survives = (rng_() & 1u) != 0;
    if (larger_survives) return a_smaller ? a : b;
    return a_smaller ? b : a;
  }

 private:
  const Graph* g_;
  TieBreakPolicy policy_;
  std::mt19937_64 rng_;
};

}  // namespace nodedom::detail
