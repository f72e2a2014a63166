#include "nodedom/communities.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nodedom {

namespace {

void check_result(const Graph& g, const CollapseResult& cr) {
  if (cr.core_mask.size() != g.node_count()) {
    throw std::invalid_argument("CollapseResult does not match this graph");
  }
}

}  // namespace

std::vector<PeripheralComponent> peripheral_components(const Graph& g, const CollapseResult& cr) {
  check_result(g, cr);
  auto comps = connected_components(g, cr.periphery);
  std::vector<PeripheralComponent> out;
  out.reserve(comps.size());
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    out.push_back({i, std::move(comps[i])});
  }
  return out;
}

std::vector<ExtendedComponent> extend_components(const Graph& g, const CollapseResult& cr,
                                                 const std::vector<PeripheralComponent>& pcs) {
  check_result(g, cr);
  std::vector<ExtendedComponent> out;
  out.reserve(pcs.size());
  for (const auto& pc : pcs) {
    ExtendedComponent ext;
    ext.base = pc.id;
    ext.members = pc.members;
    for (NodeIndex v : pc.members) {
      for (NodeIndex w : g.neighbors(v)) {
        if (cr.core_mask[w]) ext.members.push_back(w);
      }
    }
    std::sort(ext.members.begin(), ext.members.end());
    ext.members.erase(std::unique(ext.members.begin(), ext.members.end()), ext.members.end());
    out.push_back(std::move(ext));
  }
  return out;
}

CandidateSetResult candidate_sets(const Graph& g, const CollapseResult& cr,
                                  const std::vector<ExtendedComponent>& extended) {
  check_result(g, cr);
  CandidateSetResult result;

  // Component ids per anchoring core node.
  std::unordered_map<NodeIndex, std::vector<std::uint32_t>> comps_of;
  for (std::uint32_t i = 0; i < extended.size(); ++i) {
    for (NodeIndex v : extended[i].members) {
      if (cr.core_mask[v]) comps_of[v].push_back(i);
    }
  }
  for (NodeIndex v : cr.core) {
    if (!comps_of.contains(v)) result.interior_core.push_back(v);
  }

  // cs_v = union of member lists; equal sets keep the smallest-ID anchor.
  std::vector<CandidateSet> raw;
  std::vector<NodeIndex> anchors;
  anchors.reserve(comps_of.size());
  for (const auto& [v, ids] : comps_of) anchors.push_back(v);
  std::sort(anchors.begin(), anchors.end(),
            [&](NodeIndex a, NodeIndex b) { return g.id_rank(a) < g.id_rank(b); });

  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;  // hash -> raw indices
  auto hash_members = [](const std::vector<NodeIndex>& m) {
    std::size_t h = m.size();
    for (NodeIndex v : m) h = h * 1000003u + v + 1;
    return h;
  };
  for (NodeIndex v : anchors) {
    CandidateSet cs;
    cs.anchor = v;
    for (std::uint32_t i : comps_of[v]) {
      const auto& mem = extended[i].members;
      cs.members.insert(cs.members.end(), mem.begin(), mem.end());
    }
    std::sort(cs.members.begin(), cs.members.end());
    cs.members.erase(std::unique(cs.members.begin(), cs.members.end()), cs.members.end());

    const std::size_t h = hash_members(cs.members);
    bool duplicate = false;
    for (std::size_t idx : by_hash[h]) {
      if (raw[idx].members == cs.members) {
        duplicate = true;  // earlier anchor has the smaller ID; keep it
        break;
      }
    }
    if (!duplicate) {
      by_hash[h].push_back(raw.size());
      raw.push_back(std::move(cs));
    }
  }

  // Drop proper subsets. Process by descending size; containment candidates
  // come from an inverted index over members (rarest member first).
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].members.size() != raw[b].members.size()) {
      return raw[a].members.size() > raw[b].members.size();
    }
    return g.id_rank(raw[a].anchor) < g.id_rank(raw[b].anchor);
  });

  std::unordered_map<NodeIndex, std::vector<std::size_t>> inverted;  // member -> kept raw ids
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    const auto& mem = raw[idx].members;
    const std::vector<std::size_t>* smallest = nullptr;
    for (NodeIndex v : mem) {
      auto it = inverted.find(v);
      if (it == inverted.end()) {
        smallest = nullptr;  // nobody contains v, so nobody contains the set
        break;
      }
      if (smallest == nullptr || it->second.size() < smallest->size()) smallest = &it->second;
    }
    bool contained = false;
    if (smallest != nullptr) {
      for (std::size_t cand : *smallest) {
        if (raw[cand].members.size() > mem.size() &&
            sorted_subset(mem, raw[cand].members)) {
          contained = true;
          break;
        }
      }
    }
    if (contained) continue;
    kept.push_back(idx);
    for (NodeIndex v : mem) inverted[v].push_back(idx);
  }

  result.sets.reserve(kept.size());
  for (std::size_t idx : kept) result.sets.push_back(std::move(raw[idx]));
  std::vector<NodeIndex> min_rank(result.sets.size());
  for (std::size_t i = 0; i < result.sets.size(); ++i) {
    NodeIndex r = g.node_count();
    for (NodeIndex v : result.sets[i].members) r = std::min(r, g.id_rank(v));
    min_rank[i] = r;
  }
  std::vector<std::size_t> final_order(result.sets.size());
  for (std::size_t i = 0; i < final_order.size(); ++i) final_order[i] = i;
  std::sort(final_order.begin(), final_order.end(), [&](std::size_t a, std::size_t b) {
    if (min_rank[a] != min_rank[b]) return min_rank[a] < min_rank[b];
    const auto& ma = result.sets[a].members;
    const auto& mb = result.sets[b].members;
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma < mb;
  });
  std::vector<CandidateSet> ordered;
  ordered.reserve(result.sets.size());
  for (std::size_t i : final_order) ordered.push_back(std::move(result.sets[i]));
  result.sets = std::move(ordered);
  return result;
}

}  // namespace nodedom
