#include "nodedom/evaluation.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "nodedom/rng.hpp"

namespace nodedom {

PairMetrics pair_metrics(std::span<const NodeIndex> detected, std::span<const NodeIndex> target) {
  if (detected.empty() || target.empty()) {
    throw std::invalid_argument("pair_metrics requires non-empty sets");
  }
  std::size_t common = 0, i = 0, j = 0;
  while (i < detected.size() && j < target.size()) {
    if (detected[i] == target[j]) {
      ++common;
      ++i;
      ++j;
    } else if (detected[i] < target[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  PairMetrics m;
  m.precision = static_cast<double>(common) / static_cast<double>(detected.size());
  m.recall = static_cast<double>(common) / static_cast<double>(target.size());
  m.f1 = common == 0 ? 0.0 : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

namespace {

// Per-target maxima of recall, precision and F1 over an opposing collection,
// each maximized independently, via an inverted index so only sets with a
// non-empty intersection are touched (zero-overlap sets score 0 everywhere).
struct SideAccumulator {
  double recall_sum = 0, precision_sum = 0, f1_sum = 0;
  std::uint64_t contained = 0;
  std::size_t count = 0;

  MatchSideReport finish() const {
    MatchSideReport r;
    r.communities = count;
    if (count > 0) {
      const double n = static_cast<double>(count);
      r.avg_recall = recall_sum / n;
      r.avg_precision = precision_sum / n;
      r.avg_f1 = f1_sum / n;
      r.containment = static_cast<double>(contained) / n;
    }
    return r;
  }
};

SideAccumulator evaluate_side(const std::vector<std::vector<NodeIndex>>& targets,
                              const std::vector<std::vector<NodeIndex>>& detected) {
  std::unordered_map<NodeIndex, std::vector<std::uint32_t>> inverted;
  for (std::uint32_t i = 0; i < detected.size(); ++i) {
    for (NodeIndex v : detected[i]) inverted[v].push_back(i);
  }

  SideAccumulator acc;
  std::unordered_map<std::uint32_t, std::size_t> overlap;
  for (const auto& target : targets) {
    if (target.empty()) continue;
    overlap.clear();
    for (NodeIndex v : target) {
      auto it = inverted.find(v);
      if (it == inverted.end()) continue;
      for (std::uint32_t d : it->second) ++overlap[d];
    }
    double best_recall = 0, best_precision = 0, best_f1 = 0;
    bool contained = false;
    for (const auto& [d, common] : overlap) {
      const double recall = static_cast<double>(common) / static_cast<double>(target.size());
      const double precision =
          static_cast<double>(common) / static_cast<double>(detected[d].size());
      const double f1 = 2.0 * precision * recall / (precision + recall);
      best_recall = std::max(best_recall, recall);
      best_precision = std::max(best_precision, precision);
      best_f1 = std::max(best_f1, f1);
      if (common == target.size()) contained = true;
    }
    acc.recall_sum += best_recall;
    acc.precision_sum += best_precision;
    acc.f1_sum += best_f1;
    acc.contained += contained ? 1 : 0;
    ++acc.count;
  }
  return acc;
}

}  // namespace

MatchReport match_evaluate(const CommunitySet& detected, const CommunitySet& truth) {
  if (detected.sets.empty() || truth.sets.empty()) {
    throw std::invalid_argument("match_evaluate requires non-empty collections");
  }
  MatchReport report;
  report.truth_side = evaluate_side(truth.sets, detected.sets).finish();
  report.detected_side = evaluate_side(detected.sets, truth.sets).finish();
  return report;
}

DescriptiveStats descriptive_stats(const Graph& g, const CollapseResult& cr) {
  if (cr.core_mask.size() != g.node_count()) {
    throw std::invalid_argument("CollapseResult does not match this graph");
  }
  DescriptiveStats s;
  s.nodes_total = g.node_count();
  s.nodes_core = cr.core.size();
  s.nodes_periphery = cr.periphery.size();
  s.edges_total = g.edge_count();

  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w : g.neighbors(u)) {
      if (w <= u) continue;
      const int core_ends = (cr.core_mask[u] ? 1 : 0) + (cr.core_mask[w] ? 1 : 0);
      if (core_ends == 2) {
        ++s.edges_core;
      } else if (core_ends == 0) {
        ++s.edges_periphery;
      } else {
        ++s.edges_cross;
      }
    }
  }

  auto mean_degree_full = [&](std::span<const NodeIndex> subset) {
    if (subset.empty()) return 0.0;
    std::uint64_t sum = 0;
    for (NodeIndex v : subset) sum += g.degree(v);
    return static_cast<double>(sum) / static_cast<double>(subset.size());
  };
  auto mean_degree_induced = [&](std::span<const NodeIndex> subset) {
    if (subset.empty()) return 0.0;
    std::vector<std::uint8_t> in(g.node_count(), 0);
    for (NodeIndex v : subset) in[v] = 1;
    std::uint64_t sum = 0;
    for (NodeIndex v : subset) {
      for (NodeIndex w : g.neighbors(v)) sum += in[w];
    }
    return static_cast<double>(sum) / static_cast<double>(subset.size());
  };

  std::vector<NodeIndex> all(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) all[v] = v;
  s.mean_degree_entire = mean_degree_full(all);
  s.mean_degree_core_full = mean_degree_full(cr.core);
  s.mean_degree_core_core = mean_degree_induced(cr.core);
  s.mean_degree_periphery_full = mean_degree_full(cr.periphery);
  s.mean_degree_periphery_periphery = mean_degree_induced(cr.periphery);

  s.clustering_entire = clustering_coefficients(g).mean;
  s.clustering_core_full = clustering_coefficients(g, cr.core, EdgeScope::Full).mean;
  s.clustering_core_core = clustering_coefficients(g, cr.core, EdgeScope::Induced).mean;
  s.clustering_periphery_full = clustering_coefficients(g, cr.periphery, EdgeScope::Full).mean;
  s.clustering_periphery_periphery =
      clustering_coefficients(g, cr.periphery, EdgeScope::Induced).mean;
  return s;
}

MembershipProfile membership_profile(const CollapseResult& cr, const CommunitySet& truth) {
  const std::size_t n = cr.core_mask.size();
  std::vector<std::uint32_t> labels(n, 0);
  for (const auto& community : truth.sets) {
    for (NodeIndex v : community) {
      if (v < n) ++labels[v];
    }
  }

  MembershipProfile profile;
  auto account = [](MembershipProfile::Region& region, std::uint32_t count) {
    ++region.nodes;
    if (count == 0) {
      ++region.none;
    } else if (count == 1) {
      ++region.single;
    } else {
      ++region.multiple;
      region.mean_labels_among_multiple += count;
    }
  };
  for (NodeIndex v = 0; v < n; ++v) {
    account(cr.core_mask[v] ? profile.core : profile.periphery, labels[v]);
  }
  for (auto* region : {&profile.core, &profile.periphery}) {
    if (region->multiple > 0) {
      region->mean_labels_among_multiple /= static_cast<double>(region->multiple);
    }
  }
  return profile;
}

namespace {

// Top-k nodes by score, ties broken toward smaller external IDs.
std::vector<std::uint8_t> top_k_mask(const Graph& g, const std::vector<double>& score,
                                     std::size_t k) {
  std::vector<NodeIndex> order(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return g.id_rank(a) < g.id_rank(b);
  });
  std::vector<std::uint8_t> mask(g.node_count(), 0);
  for (std::size_t i = 0; i < k && i < order.size(); ++i) mask[order[i]] = 1;
  return mask;
}

}  // namespace

PathShareReport shortest_path_share(const Graph& g, const CollapseResult& cr,
                                    const PathShareOptions& opt) {
  const NodeIndex n = g.node_count();
  if (n < 2) throw std::invalid_argument("shortest_path_share needs at least 2 nodes");
  if (opt.pairs < 1) throw std::invalid_argument("shortest_path_share needs pairs >= 1");
  if (cr.core_mask.size() != n) {
    throw std::invalid_argument("CollapseResult does not match this graph");
  }

  PathShareReport report;
  report.pairs = opt.pairs;
  report.seed = opt.seed;
  report.all_paths = opt.all_paths;
  report.sampled_bc = opt.bc_pivots > 0 && opt.bc_pivots < n;
  report.bc_pivots = report.sampled_bc ? opt.bc_pivots : n;

  const std::size_t k = cr.core.size();

  BetweennessOptions bc_opt;
  bc_opt.pivots = opt.bc_pivots;
  bc_opt.seed = opt.seed;
  bc_opt.threads = opt.threads;
  const auto bc = betweenness(g, bc_opt);
  const auto bc_mask = top_k_mask(g, bc.score, k);

  std::vector<double> deg(n);
  for (NodeIndex v = 0; v < n; ++v) deg[v] = g.degree(v);
  const auto degree_mask = top_k_mask(g, deg, k);

  std::mt19937_64 rng(opt.seed);
  std::vector<std::uint8_t> random_mask(n, 0);
  for (std::uint32_t v : sample_without_replacement(n, static_cast<std::uint32_t>(k), rng)) {
    random_mask[v] = 1;
  }

  const std::array<const std::vector<std::uint8_t>*, 4> masks = {&cr.core_mask, &bc_mask,
                                                                 &degree_mask, &random_mask};
  std::array<double, 4> sums{0, 0, 0, 0};

  // Uniform connected pairs via rejection. A graph with no connected pair
  // (no edges at all) cannot satisfy the experiment.
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no connected node pair");
  std::uint32_t accepted = 0;
  while (accepted < opt.pairs) {
    const NodeIndex s = static_cast<NodeIndex>(uniform_index(rng, n));
    const NodeIndex t = static_cast<NodeIndex>(uniform_index(rng, n));
    if (s == t) continue;
    const PathStats from_s = bfs_shortest_paths(g, s);
    if (from_s.dist[t] == kUnreachable) continue;
    ++accepted;

    if (!opt.all_paths) {
      const auto path = shortest_path_between(g, s, t);
      for (std::size_t m = 0; m < masks.size(); ++m) {
        std::size_t inside = 0;
        for (NodeIndex v : path) inside += (*masks[m])[v];
        sums[m] += static_cast<double>(inside) / static_cast<double>(path.size());
      }
    } else {
      // Expected in-set proportion over all shortest paths: node v lies on a
      // fraction sigma_s(v)*sigma_t(v)/sigma_s(t) of them.
      const PathStats from_t = bfs_shortest_paths(g, t);
      const std::int32_t total = from_s.dist[t];
      const double total_paths = static_cast<double>(from_s.sigma[t]);
      const double path_nodes = static_cast<double>(total) + 1.0;
      std::array<double, 4> expected{0, 0, 0, 0};
      for (NodeIndex v = 0; v < n; ++v) {
        if (from_s.dist[v] == kUnreachable || from_t.dist[v] == kUnreachable) continue;
        if (from_s.dist[v] + from_t.dist[v] != total) continue;
        const double weight = static_cast<double>(from_s.sigma[v]) *
                              static_cast<double>(from_t.sigma[v]) / total_paths;
        for (std::size_t m = 0; m < masks.size(); ++m) {
          if ((*masks[m])[v]) expected[m] += weight;
        }
      }
      for (std::size_t m = 0; m < masks.size(); ++m) sums[m] += expected[m] / path_nodes;
    }
  }

  report.core = sums[0] / opt.pairs;
  report.top_bc = sums[1] / opt.pairs;
  report.top_degree = sums[2] / opt.pairs;
  report.random_set = sums[3] / opt.pairs;
  return report;
}

std::vector<BcDegreeRow> bc_degree_scatter(const Graph& g, const CollapseResult& cr,
                                           const BetweennessResult& bc) {
  std::vector<BcDegreeRow> rows;
  rows.reserve(g.node_count());
  for (NodeIndex v : g.nodes_by_rank()) {
    rows.push_back({g.external_id(v), g.degree(v), bc.score[v], cr.core_mask[v] != 0});
  }
  return rows;
}

}  // namespace nodedom
