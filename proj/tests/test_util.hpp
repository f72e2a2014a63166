#pragma once

// Fixtures and independent brute-force oracles shared by the test suites.
// Oracles deliberately avoid the library's algorithm paths: betweenness is
// counted by enumerating paths, subset checks run on std::set, and candidate
// sets are rebuilt with naive set algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom::testutil {

/// C4 on IDs 1..4 plus an ear triangle {1,5,6}. Collapses to core {1,2,3,4}.
inline Graph square_with_ear() {
  return Graph::from_edges(std::vector<std::pair<std::int64_t, std::int64_t>>{
      {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {1, 6}, {5, 6}});
}

/// Triangle {1,2,3} with pendant 4 attached to 3.
inline Graph triangle_pendant() {
  return Graph::from_edges(
      std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

/// Path on IDs 1..n.
inline Graph path_graph(NodeIndex n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (NodeIndex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(edges, {1});
}

inline NodeIndex node(const Graph& g, std::int64_t id) {
  return g.find(std::to_string(id)).value();
}

inline std::vector<NodeIndex> nodes(const Graph& g, std::initializer_list<std::int64_t> ids) {
  std::vector<NodeIndex> out;
  for (auto id : ids) out.push_back(node(g, id));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> external_ids(const Graph& g, std::span<const NodeIndex> vs) {
  std::vector<std::int64_t> out;
  for (NodeIndex v : vs) out.push_back(std::stoll(g.external_id(v)));
  std::sort(out.begin(), out.end());
  return out;
}

/// All-pairs hop distances by Floyd-Warshall (independent of BFS).
inline std::vector<std::vector<int>> naive_distances(const Graph& g) {
  const int n = static_cast<int>(g.node_count());
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w : g.neighbors(u)) d[u][w] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

namespace detail {

inline void enumerate_paths(const Graph& g, NodeIndex cur, NodeIndex t,
                            const std::vector<std::vector<int>>& d,
                            std::vector<NodeIndex>& path,
                            std::vector<std::vector<NodeIndex>>& out) {
  if (cur == t) {
    out.push_back(path);
    return;
  }
  for (NodeIndex w : g.neighbors(cur)) {
    if (d[cur][t] == d[w][t] + 1) {
      path.push_back(w);
      enumerate_paths(g, w, t, d, path, out);
      path.pop_back();
    }
  }
}

}  // namespace detail

/// Every shortest path from s to t, enumerated explicitly.
inline std::vector<std::vector<NodeIndex>> all_shortest_paths(const Graph& g, NodeIndex s,
                                                              NodeIndex t) {
  const auto d = naive_distances(g);
  if (d[s][t] >= (1 << 28)) return {};
  std::vector<std::vector<NodeIndex>> out;
  std::vector<NodeIndex> path{s};
  detail::enumerate_paths(g, s, t, d, path, out);
  return out;
}

/// Betweenness straight from the definition, by path enumeration. n <= ~12.
inline std::vector<double> naive_betweenness(const Graph& g) {
  const NodeIndex n = g.node_count();
  std::vector<double> bc(n, 0.0);
  for (NodeIndex s = 0; s < n; ++s) {
    for (NodeIndex t = s + 1; t < n; ++t) {
      const auto paths = all_shortest_paths(g, s, t);
      if (paths.empty()) continue;
      std::vector<std::size_t> through(n, 0);
      for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
      }
      for (NodeIndex v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        bc[v] += static_cast<double>(through[v]) / static_cast<double>(paths.size());
      }
    }
  }
  return bc;
}

/// Closed neighborhood as a std::set (no sorted-merge machinery).
inline std::set<NodeIndex> naive_closed(const Graph& g, NodeIndex v) {
  std::set<NodeIndex> out{v};
  for (NodeIndex w : g.neighbors(v)) out.insert(w);
  return out;
}

/// Maximal cliques via Bron-Kerbosch (no pivoting; test-scale graphs only).
inline std::vector<std::vector<NodeIndex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<NodeIndex>> out;
  std::vector<NodeIndex> r;
  std::set<NodeIndex> p, x;
  for (NodeIndex v = 0; v < g.node_count(); ++v) p.insert(v);

  auto expand = [&](auto&& self, std::set<NodeIndex> pp, std::set<NodeIndex> xx) -> void {
    if (pp.empty() && xx.empty()) {
      out.push_back(r);
      return;
    }
    while (!pp.empty()) {
      const NodeIndex v = *pp.begin();
      std::set<NodeIndex> pv, xv;
      for (NodeIndex w : g.neighbors(v)) {
        if (pp.contains(w)) pv.insert(w);
        if (xx.contains(w)) xv.insert(w);
      }
      r.push_back(v);
      self(self, std::move(pv), std::move(xv));
      r.pop_back();
      pp.erase(v);
      xx.insert(v);
    }
  };
  expand(expand, std::move(p), std::move(x));
  for (auto& clique : out) std::sort(clique.begin(), clique.end());
  return out;
}

/// Relation lists modeling the flag complex: node -> IDs of the maximal
/// cliques containing it.
inline std::vector<std::vector<std::uint32_t>> flag_relation_lists(const Graph& g) {
  const auto cliques = maximal_cliques(g);
  std::vector<std::vector<std::uint32_t>> lists(g.node_count());
  for (std::uint32_t c = 0; c < cliques.size(); ++c) {
    for (NodeIndex v : cliques[c]) lists[v].push_back(c);
  }
  return lists;
}

/// Candidate sets by unoptimized set algebra straight from the definitions.
inline std::vector<std::set<NodeIndex>> naive_candidate_sets(const Graph& g,
                                                             const CollapseResult& cr) {
  // Peripheral components by repeated flooding over std::set.
  std::set<NodeIndex> remaining(cr.periphery.begin(), cr.periphery.end());
  std::vector<std::set<NodeIndex>> comps;
  while (!remaining.empty()) {
    std::set<NodeIndex> comp;
    std::vector<NodeIndex> frontier{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!frontier.empty()) {
      const NodeIndex u = frontier.back();
      frontier.pop_back();
      comp.insert(u);
      for (NodeIndex w : g.neighbors(u)) {
        if (remaining.contains(w)) {
          remaining.erase(w);
          frontier.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }

  // Extended components.
  std::vector<std::set<NodeIndex>> extended;
  for (const auto& comp : comps) {
    std::set<NodeIndex> ext = comp;
    for (NodeIndex v : comp) {
      for (NodeIndex w : g.neighbors(v)) {
        if (cr.core_mask[w]) ext.insert(w);
      }
    }
    extended.push_back(std::move(ext));
  }

  // cs_v per core node, deduplicated.
  std::set<std::set<NodeIndex>> unique_sets;
  for (NodeIndex v : cr.core) {
    std::set<NodeIndex> cs;
    bool any = false;
    for (const auto& ext : extended) {
      if (ext.contains(v)) {
        cs.insert(ext.begin(), ext.end());
        any = true;
      }
    }
    if (any) unique_sets.insert(std::move(cs));
  }

  // Drop subsets by quadratic scan.
  std::vector<std::set<NodeIndex>> result;
  for (const auto& cs : unique_sets) {
    bool contained = false;
    for (const auto& other : unique_sets) {
      if (&other == &cs || other.size() <= cs.size()) continue;
      if (std::includes(other.begin(), other.end(), cs.begin(), cs.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) result.push_back(cs);
  }
  return result;
}

}  // namespace nodedom::testutil
