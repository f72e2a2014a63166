#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

/// Labeled collection of (possibly overlapping) node sets. Members are
/// resolved graph nodes; IDs that failed to resolve are counted, and
/// communities that lost every member are dropped but counted too.
struct CommunitySet {
  std::string name;
  std::vector<std::vector<NodeIndex>> sets;  // each sorted ascending
  bool ground_truth = false;
  std::uint64_t unresolved_ids = 0;
  std::uint64_t dropped_empty = 0;
};

struct PairMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// precision = |∩|/|detected|, recall = |∩|/|target|, f1 = harmonic mean
/// (0 when the intersection is empty). Both sets must be non-empty.
PairMetrics pair_metrics(std::span<const NodeIndex> detected, std::span<const NodeIndex> target);

/// Per-side averages where each metric is maximized independently over the
/// opposing collection before averaging.
struct MatchSideReport {
  double avg_recall = 0.0;
  double avg_precision = 0.0;
  double avg_f1 = 0.0;
  /// Fraction of this side's communities fully contained in some set of the
  /// opposing collection.
  double containment = 0.0;
  std::size_t communities = 0;
};

struct MatchReport {
  MatchSideReport truth_side;     // ground-truth communities vs detected sets
  MatchSideReport detected_side;  // detected sets vs ground-truth communities
};

MatchReport match_evaluate(const CommunitySet& detected, const CommunitySet& truth);

/// Node/edge/degree/clustering breakdown over the core-periphery partition.
struct DescriptiveStats {
  std::uint64_t nodes_total = 0, nodes_core = 0, nodes_periphery = 0;
  std::uint64_t edges_total = 0, edges_core = 0, edges_periphery = 0, edges_cross = 0;
  // Scopes: entire network; core w.r.t. entire; core w.r.t. core;
  // periphery w.r.t. entire; periphery w.r.t. periphery.
  double mean_degree_entire = 0, mean_degree_core_full = 0, mean_degree_core_core = 0,
         mean_degree_periphery_full = 0, mean_degree_periphery_periphery = 0;
  double clustering_entire = 0, clustering_core_full = 0, clustering_core_core = 0,
         clustering_periphery_full = 0, clustering_periphery_periphery = 0;
};

DescriptiveStats descriptive_stats(const Graph& g, const CollapseResult& cr);

/// Community-membership counts split by region.
struct MembershipProfile {
  struct Region {
    std::uint64_t nodes = 0;
    std::uint64_t none = 0, single = 0, multiple = 0;
    double mean_labels_among_multiple = 0.0;
  };
  Region core, periphery;
};

MembershipProfile membership_profile(const CollapseResult& cr, const CommunitySet& truth);

struct PathShareOptions {
  std::uint32_t pairs = 1000;
  std::uint64_t seed = 0;
  /// Average the in-set proportion over all shortest paths of a pair instead
  /// of the single deterministically tie-broken path.
  bool all_paths = false;
  /// 0 = exact betweenness for the top-BC set; otherwise sampled pivots.
  std::uint32_t bc_pivots = 0;
  unsigned threads = 1;
};

/// Mean proportion of shortest-path nodes (endpoints included) falling in
/// each comparison set; all four sets have |core| nodes.
struct PathShareReport {
  double core = 0.0;
  double top_bc = 0.0;
  double top_degree = 0.0;
  double random_set = 0.0;
  std::uint32_t pairs = 0;
  std::uint64_t seed = 0;
  bool all_paths = false;
  bool sampled_bc = false;
  std::uint32_t bc_pivots = 0;
};

PathShareReport shortest_path_share(const Graph& g, const CollapseResult& cr,
                                    const PathShareOptions& opt);

/// Per-node degree / betweenness / region rows for external plotting.
struct BcDegreeRow {
  std::string id;
  NodeIndex degree = 0;
  double bc = 0.0;
  bool core = false;
};

std::vector<BcDegreeRow> bc_degree_scatter(const Graph& g, const CollapseResult& cr,
                                           const BetweennessResult& bc);

}  // namespace nodedom
