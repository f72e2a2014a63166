#include "nodedom/collapse.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dominance_detail.hpp"
#include "nodedom/rng.hpp"

namespace nodedom {

using detail::RelationIndex;
using detail::Residual;

DominanceVariant DominanceVariant::relation(std::vector<std::vector<std::uint32_t>> lists) {
  DominanceVariant v;
  v.kind = VariantKind::Relation;
  v.relation_lists = std::move(lists);
  for (auto& list : v.relation_lists) std::sort(list.begin(), list.end());
  return v;
}

namespace {

void check_relation_lists(const Graph& g, const DominanceVariant& variant) {
  if (variant.kind == VariantKind::Relation &&
      variant.relation_lists.size() != g.node_count()) {
    throw std::invalid_argument("relation variant needs a simplex list for every node");
  }
}

// Dominators of v in the residual graph, split into strict dominators and
// mutual (equal-neighborhood) partners. Mutual partners come back sorted by
// rank; strict_best is the smallest-rank strict dominator.
struct DominatorScan {
  bool any = false;
  NodeIndex strict_best = 0;
  bool has_strict = false;
  std::vector<NodeIndex> mutual;
};

class DominanceEngine {
 public:
  DominanceEngine(const Graph& g, const DominanceVariant& variant, Residual& res)
      : g_(g), variant_(variant), res_(res) {
    if (variant.kind == VariantKind::Relation) index_ = RelationIndex(variant.relation_lists);
  }

  DominatorScan scan(NodeIndex v) const {
    DominatorScan out;
    auto consider = [&](NodeIndex w, bool subset, bool equal) {
      if (!subset) return;
      out.any = true;
      if (equal) {
        out.mutual.push_back(w);
      } else if (!out.has_strict || g_.id_rank(w) < g_.id_rank(out.strict_best)) {
        out.strict_best = w;
        out.has_strict = true;
      }
    };

    switch (variant_.kind) {
      case VariantKind::OneHop: {
        for (NodeIndex w : res_.adj(v)) {
          const bool subset = res_.closed_subset(v, w);
          consider(w, subset, subset && res_.adj(v).size() == res_.adj(w).size());
        }
        break;
      }
      case VariantKind::TwoHop: {
        const auto nv = res_.two_hop(v);
        for (NodeIndex w : nv) {
          if (w == v) continue;
          const auto nw = res_.two_hop(w);
          const bool subset = nv.size() <= nw.size() && sorted_subset(nv, nw);
          consider(w, subset, subset && nv.size() == nw.size());
        }
        break;
      }
      case VariantKind::Relation: {
        const auto& lv = variant_.relation_lists[v];
        if (lv.empty()) break;
        for (NodeIndex w : index_.peers(v, lv, res_)) {
          const auto& lw = variant_.relation_lists[w];
          const bool subset = detail::list_subset(lv, lw);
          consider(w, subset, subset && lv.size() == lw.size());
        }
        break;
      }
    }
    std::sort(out.mutual.begin(), out.mutual.end(),
              [&](NodeIndex a, NodeIndex b) { return g_.id_rank(a) < g_.id_rank(b); });
    return out;
  }

  bool dominated(NodeIndex v) const {
    const auto s = scan(v);
    return s.any;
  }

  std::vector<NodeIndex> relation_peers(NodeIndex v) const {
    return index_.peers(v, variant_.relation_lists[v], res_);
  }

  /// Nodes whose dominance status may change when r is removed. Computed
  /// before the removal. Relation lists are static, so no node can become
  /// dominated there and the set is empty.
  std::vector<NodeIndex> dirty_after_removal(NodeIndex r) const {
    switch (variant_.kind) {
      case VariantKind::OneHop:
        return {res_.adj(r).begin(), res_.adj(r).end()};
      case VariantKind::TwoHop: {
        auto out = res_.two_hop(r);
        out.erase(std::remove(out.begin(), out.end(), r), out.end());
        return out;
      }
      case VariantKind::Relation:
        return {};
    }
    return {};
  }

 private:
  const Graph& g_;
  const DominanceVariant& variant_;
  Residual& res_;
  RelationIndex index_;
};

}  // namespace

bool is_dominated(const Graph& g, NodeIndex v, NodeIndex w, const DominanceVariant& variant) {
  g.check_node(v);
  g.check_node(w);
  if (v == w) throw std::invalid_argument("is_dominated: v and w must differ");
  check_relation_lists(g, variant);
  Residual res(g);
  switch (variant.kind) {
    case VariantKind::OneHop:
      return g.has_edge(v, w) && res.closed_subset(v, w);
    case VariantKind::TwoHop: {
      const auto nv = res.two_hop(v);
      if (!std::binary_search(nv.begin(), nv.end(), w)) return false;
      const auto nw = res.two_hop(w);
      return nv.size() <= nw.size() && sorted_subset(nv, nw);
    }
    case VariantKind::Relation: {
      const auto& lv = variant.relation_lists[v];
      const auto& lw = variant.relation_lists[w];
      if (lv.empty()) return false;  // no shared simplex possible
      if (!detail::list_subset(lv, lw)) return false;
      return true;  // lv nonempty and lv ⊆ lw implies a shared simplex
    }
  }
  return false;
}

CollapseResult collapse(const Graph& g, const DominanceVariant& variant,
                        const TieBreakPolicy& policy) {
  check_relation_lists(g, variant);
  const NodeIndex n = g.node_count();

  CollapseResult result;
  result.variant = variant.kind;
  result.policy = policy;
  result.core_mask.assign(n, 1);

  Residual res(g);
  DominanceEngine engine(g, variant, res);
  detail::HandshakeResolver handshake(g, policy);

  std::vector<std::uint8_t> dirty_mask(n, 0);
  std::vector<NodeIndex> dirty(g.nodes_by_rank().begin(), g.nodes_by_rank().end());

  auto remove_node = [&](NodeIndex r, NodeIndex dominator, std::uint32_t iteration) {
    for (NodeIndex u : engine.dirty_after_removal(r)) dirty_mask[u] = 1;
    res.remove(r);
    result.core_mask[r] = 0;
    result.removal_log.push_back({r, dominator, iteration});
  };

  // A handshake designates the pair's loser once (first time the pair is
  // seen, which happens in canonical ID order); the loser is removed at its
  // own scan turn. Removing the partner out of turn instead would let a
  // mid-scan strictness check disconnect twin chains (e.g. the 2-hop C5
  // would strand two nodes).
  std::unordered_map<std::uint64_t, NodeIndex> pair_loser;
  auto loser_of = [&](NodeIndex a, NodeIndex b) {
    const std::uint64_t key =
        static_cast<std::uint64_t>(std::min(a, b)) * n + std::max(a, b);
    auto it = pair_loser.find(key);
    if (it == pair_loser.end()) it = pair_loser.emplace(key, handshake.loser(a, b)).first;
    return it->second;
  };

  std::uint32_t iteration = 1;
  while (!dirty.empty()) {
    for (NodeIndex v : dirty) {
      if (!res.alive(v)) continue;
      const DominatorScan s = engine.scan(v);
      if (!s.any) continue;
      if (s.has_strict) {
        remove_node(v, s.strict_best, iteration);
        continue;
      }
      for (NodeIndex partner : s.mutual) {
        if (loser_of(v, partner) == v) {
          remove_node(v, partner, iteration);
          break;
        }
        // v survives this pair; make sure the loser gets a scan turn.
        dirty_mask[partner] = 1;
      }
    }
    dirty.clear();
    for (NodeIndex v : g.nodes_by_rank()) {
      if (dirty_mask[v] && res.alive(v)) dirty.push_back(v);
      dirty_mask[v] = 0;
    }
    ++iteration;
  }

  for (NodeIndex v = 0; v < n; ++v) {
    (result.core_mask[v] ? result.core : result.periphery).push_back(v);
  }
  return result;
}

namespace {

// Constant-time insert/erase/uniform-pick over a dynamic node set. Vector
// order depends only on the (deterministic) insertion/removal history.
class PickSet {
 public:
  explicit PickSet(NodeIndex n) : pos_(n, kAbsent) {}

  bool contains(NodeIndex v) const { return pos_[v] != kAbsent; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  NodeIndex at(std::size_t i) const { return items_[i]; }

  void insert(NodeIndex v) {
    if (contains(v)) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }

  void erase(NodeIndex v) {
    const std::size_t i = pos_[v];
    if (i == kAbsent) return;
    const NodeIndex last = items_.back();
    items_[i] = last;
    pos_[last] = i;
    items_.pop_back();
    pos_[v] = kAbsent;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<NodeIndex> items_;
  std::vector<std::size_t> pos_;
};

// One randomized-order realization; returns the surviving core mask.
std::vector<std::uint8_t> randomized_realization(const Graph& g, const DominanceVariant& variant,
                                                 std::uint64_t seed) {
  const NodeIndex n = g.node_count();
  Residual res(g);
  DominanceEngine engine(g, variant, res);
  std::mt19937_64 rng(seed);

  PickSet dominated(n);
  for (NodeIndex v : g.nodes_by_rank()) {
    if (engine.dominated(v)) dominated.insert(v);
  }

  std::vector<NodeIndex> recheck;
  while (!dominated.empty()) {
    const NodeIndex victim = dominated.at(uniform_index(rng, dominated.size()));
    dominated.erase(victim);

    // Two-hop dominance is not monotone under removals, so recheck every
    // remaining node there; 1-hop status can only change next to the victim
    // and relation status only for its co-simplex peers.
    recheck.clear();
    if (variant.kind == VariantKind::TwoHop) {
      for (NodeIndex u = 0; u < n; ++u) {
        if (u != victim && res.alive(u)) recheck.push_back(u);
      }
    } else if (variant.kind == VariantKind::OneHop) {
      recheck.assign(res.adj(victim).begin(), res.adj(victim).end());
    } else {
      recheck = engine.relation_peers(victim);
    }
    res.remove(victim);

    for (NodeIndex u : recheck) {
      if (!res.alive(u)) continue;
      if (engine.dominated(u)) {
        dominated.insert(u);
      } else {
        dominated.erase(u);
      }
    }
  }

  std::vector<std::uint8_t> core_mask(n, 0);
  for (NodeIndex v = 0; v < n; ++v) core_mask[v] = res.alive(v) ? 1 : 0;
  return core_mask;
}

}  // namespace

StabilityReport stability_analysis(const Graph& g, const DominanceVariant& variant,
                                   std::uint32_t realizations, std::uint64_t base_seed,
                                   unsigned threads) {
  if (realizations < 2) throw std::invalid_argument("stability_analysis needs >= 2 realizations");
  check_relation_lists(g, variant);
  const NodeIndex n = g.node_count();

  std::vector<std::uint32_t> core_count(n, 0);
  std::uint32_t size_min = n, size_max = 0;
  std::mutex merge_mutex;
  std::atomic<std::uint32_t> next{0};
  auto worker = [&]() {
    std::vector<std::uint32_t> local(n, 0);
    std::uint32_t local_min = n, local_max = 0;
    for (;;) {
      const std::uint32_t r = next.fetch_add(1);
      if (r >= realizations) break;
      const auto mask = randomized_realization(g, variant, base_seed + r);
      std::uint32_t size = 0;
      for (NodeIndex v = 0; v < n; ++v) {
        local[v] += mask[v];
        size += mask[v];
      }
      local_min = std::min(local_min, size);
      local_max = std::max(local_max, size);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (NodeIndex v = 0; v < n; ++v) core_count[v] += local[v];
    size_min = std::min(size_min, local_min);
    size_max = std::max(size_max, local_max);
  };

  const unsigned used = std::max(1u, std::min(threads, realizations));
  if (used == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  StabilityReport report;
  report.realizations = realizations;
  report.base_seed = base_seed;
  report.variant = variant.kind;
  report.core_size_min = size_min;
  report.core_size_max = size_max;
  report.core_frequency.resize(n);
  for (NodeIndex v = 0; v < n; ++v) {
    report.core_frequency[v] =
        static_cast<double>(core_count[v]) / static_cast<double>(realizations);
    if (core_count[v] == realizations) report.always_core.push_back(v);
    if (core_count[v] > 0) report.ever_core.push_back(v);
  }
  return report;
}

}  // namespace nodedom
