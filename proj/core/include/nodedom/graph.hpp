#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nodedom {

using NodeIndex = std::uint32_t;

/// Marker for nodes a BFS did not reach.
inline constexpr std::int32_t kUnreachable = -1;

/// Undirected simple graph: CSR adjacency with per-node sorted neighbor
/// lists, dense internal indices, and a bijective map to external IDs.
///
/// Internal indices are assigned by first appearance in the input edge list.
/// External IDs keep their own canonical order: numeric when every ID parses
/// as an integer, lexicographic otherwise. All deterministic scans and
/// tie-breaks in the library go through that order (id_rank / nodes_by_rank)
/// so results are reproducible regardless of input line order.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes a raw edge list: self-loops dropped, duplicate and
  /// reversed-duplicate edges merged. extra_nodes adds vertices (possibly
  /// isolated) that no edge mentions; duplicates there are merged too.
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& extra_nodes = {});

  /// Convenience overload for integer IDs (tests, generators).
  static Graph from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                          const std::vector<std::int64_t>& extra_nodes = {});

  /// Graph over exactly node_count vertices with external IDs "0".."n-1".
  /// Keeps isolated vertices, unlike edge-list ingestion.
  static Graph from_index_edges(NodeIndex node_count,
                                const std::vector<std::pair<NodeIndex, NodeIndex>>& edges);

  /// Graph over an explicit node set (internal index = position in ids) and
  /// edges given as index pairs.
  static Graph from_nodes_and_edges(std::vector<std::string> ids,
                                    std::vector<std::pair<NodeIndex, NodeIndex>> edges);

  NodeIndex node_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  NodeIndex degree(NodeIndex v) const {
    return static_cast<NodeIndex>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  const std::string& external_id(NodeIndex v) const { return ids_[v]; }
  std::optional<NodeIndex> find(const std::string& external_id) const;

  /// Position of v in the canonical external-ID order.
  NodeIndex id_rank(NodeIndex v) const { return rank_[v]; }
  /// Node indices sorted by canonical external-ID order.
  std::span<const NodeIndex> nodes_by_rank() const { return by_rank_; }
  /// True when every external ID parsed as an integer (numeric ordering).
  bool numeric_ids() const { return numeric_ids_; }

  void check_node(NodeIndex v) const;  // throws std::out_of_range

 private:
  NodeIndex n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> adj_;
  std::vector<std::string> ids_;
  std::vector<NodeIndex> rank_;
  std::vector<NodeIndex> by_rank_;
  bool numeric_ids_ = true;
  std::unordered_map<std::string, NodeIndex> index_;
};

/// Closed neighborhood: sorted member list that always includes the owner.
struct NeighborSet {
  NodeIndex owner = 0;
  std::vector<NodeIndex> members;
};

/// Per-source BFS output: hop distances and shortest-path multiplicities.
struct PathStats {
  NodeIndex source = 0;
  std::vector<std::int32_t> dist;    // kUnreachable where not connected
  std::vector<std::uint64_t> sigma;  // number of shortest paths from source
};

struct BetweennessOptions {
  std::uint32_t pivots = 0;  // 0 = exact; otherwise sampled-source estimate
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct BetweennessResult {
  std::vector<double> score;
  bool sampled = false;
  std::uint32_t pivots_used = 0;
  bool clamped_to_exact = false;  // pivots exceeded node count
};

enum class EdgeScope { Full, Induced };

struct ClusteringResult {
  std::vector<double> local;  // zero outside the evaluated subset
  double mean = 0.0;          // over the subset
};

NeighborSet closed_neighborhood(const Graph& g, NodeIndex v);

/// Union of the closed neighborhoods of all members of N[v] ("friends of
/// friends", plus v itself).
NeighborSet two_hop_neighborhood(const Graph& g, NodeIndex v);

PathStats bfs_shortest_paths(const Graph& g, NodeIndex source);

/// Brandes betweenness over unordered pairs, endpoints excluded. Sampled
/// mode (pivots > 0) draws that many distinct sources and scales by n/k,
/// which is unbiased and reproduces exact mode bit-for-bit at k = n.
/// pivots > n is clamped to exact and flagged. Parallel accumulation is
/// striped so the result is independent of the thread count.
BetweennessResult betweenness(const Graph& g, const BetweennessOptions& opt = {});

/// Local clustering coefficients 2*T(v)/(d(d-1)); nodes with d < 2 get 0.
/// The two-argument form evaluates over all nodes of the full graph.
/// With a subset, the mean is over the subset; Induced scope restricts both
/// degrees and triangles to the subset-induced subgraph.
ClusteringResult clustering_coefficients(const Graph& g);
ClusteringResult clustering_coefficients(const Graph& g, std::span<const NodeIndex> subset,
                                         EdgeScope scope);

/// Connected components (of the subset-induced subgraph in the second form).
/// Members sorted ascending; components ordered by smallest member rank.
std::vector<std::vector<NodeIndex>> connected_components(const Graph& g);
std::vector<std::vector<NodeIndex>> connected_components(const Graph& g,
                                                         std::span<const NodeIndex> subset);

/// Subgraph induced by `nodes` (need not be sorted); keeps external IDs.
Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes);

/// True iff sorted range a is a subset of sorted range b.
bool sorted_subset(std::span<const NodeIndex> a, std::span<const NodeIndex> b);

/// One shortest path from s to t with deterministic tie-breaks (each hop
/// picks the smallest-rank next node among valid ones). Empty if unreachable.
std::vector<NodeIndex> shortest_path_between(const Graph& g, NodeIndex s, NodeIndex t);

}  // namespace nodedom
