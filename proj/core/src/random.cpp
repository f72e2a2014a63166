#include "nodedom/random.hpp"

#include <random>
#include <stdexcept>

#include "nodedom/rng.hpp"

namespace nodedom {

Graph erdos_renyi(NodeIndex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = u + 1; v < n; ++v) {
      if (uniform_real(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_index_edges(n, edges);
}

Graph random_tree(NodeIndex n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree requires n >= 1");
  if (n == 1) return Graph::from_index_edges(1, {});
  if (n == 2) return Graph::from_index_edges(2, {{0, 1}});

  std::mt19937_64 rng(seed);
  std::vector<NodeIndex> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<NodeIndex>(uniform_index(rng, n));

  std::vector<NodeIndex> degree(n, 1);
  for (NodeIndex x : prufer) ++degree[x];

  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(n - 1);
  // Smallest-leaf decoding; a heap would be overkill at tree sizes used here.
  std::vector<std::uint8_t> used(n, 0);
  for (NodeIndex x : prufer) {
    NodeIndex leaf = 0;
    while (leaf < n && (degree[leaf] != 1 || used[leaf])) ++leaf;
    edges.emplace_back(leaf, x);
    used[leaf] = 1;
    --degree[x];
    --degree[leaf];
  }
  NodeIndex a = n, b = n;
  for (NodeIndex v = 0; v < n; ++v) {
    if (degree[v] == 1 && !used[v]) {
      if (a == n) {
        a = v;
      } else {
        b = v;
      }
    }
  }
  edges.emplace_back(a, b);
  return Graph::from_index_edges(n, edges);
}

Graph cycle_graph(NodeIndex n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (NodeIndex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edges(edges);
}

Graph complete_graph(NodeIndex n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::int64_t> nodes;
  for (NodeIndex u = 1; u <= n; ++u) {
    nodes.push_back(u);
    for (NodeIndex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(edges, nodes);
}

Graph star_graph(NodeIndex leaves) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (NodeIndex v = 0; v < leaves; ++v) edges.emplace_back(1, v + 2);
  return Graph::from_edges(edges, {1});
}

}  // namespace nodedom
