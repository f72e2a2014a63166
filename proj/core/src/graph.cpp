#include "nodedom/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nodedom/rng.hpp"

namespace nodedom {

namespace {

bool parse_int64(const std::string& text, std::int64_t& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k,
                                                      std::mt19937_64& rng) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + uniform_index(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Graph Graph::from_nodes_and_edges(std::vector<std::string> ids,
                                  std::vector<std::pair<NodeIndex, NodeIndex>> edges) {
  Graph g;
  g.n_ = static_cast<NodeIndex>(ids.size());
  g.ids_ = std::move(ids);
  for (const auto& [u, v] : edges) {
    if (u >= g.n_ || v >= g.n_) throw std::out_of_range("edge endpoint out of range");
  }

  // Normalize: drop self-loops, order endpoints, dedupe.
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edge_count_ = edges.size();

  std::vector<std::size_t> deg(g.n_ + 1, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(g.n_ + 1, 0);
  for (NodeIndex v = 0; v < g.n_; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (NodeIndex v = 0; v < g.n_; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }

  // Canonical external-ID order: numeric when every ID is an integer.
  std::vector<std::int64_t> numeric(g.n_);
  g.numeric_ids_ = true;
  for (NodeIndex v = 0; v < g.n_; ++v) {
    if (!parse_int64(g.ids_[v], numeric[v])) {
      g.numeric_ids_ = false;
      break;
    }
  }
  g.by_rank_.resize(g.n_);
  std::iota(g.by_rank_.begin(), g.by_rank_.end(), 0u);
  if (g.numeric_ids_) {
    std::sort(g.by_rank_.begin(), g.by_rank_.end(),
              [&](NodeIndex a, NodeIndex b) { return numeric[a] < numeric[b]; });
  } else {
    std::sort(g.by_rank_.begin(), g.by_rank_.end(),
              [&](NodeIndex a, NodeIndex b) { return g.ids_[a] < g.ids_[b]; });
  }
  g.rank_.resize(g.n_);
  for (NodeIndex pos = 0; pos < g.n_; ++pos) g.rank_[g.by_rank_[pos]] = pos;

  g.index_.reserve(g.n_);
  for (NodeIndex v = 0; v < g.n_; ++v) g.index_.emplace(g.ids_[v], v);
  return g;
}

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& extra_nodes) {
  std::vector<std::string> ids;
  std::unordered_map<std::string, NodeIndex> seen;
  auto intern = [&](const std::string& id) -> NodeIndex {
    auto [it, inserted] = seen.emplace(id, static_cast<NodeIndex>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };
  std::vector<std::pair<NodeIndex, NodeIndex>> internal;
  internal.reserve(edges.size());
  for (const auto& [a, b] : edges) internal.emplace_back(intern(a), intern(b));
  for (const auto& id : extra_nodes) intern(id);
  return from_nodes_and_edges(std::move(ids), std::move(internal));
}

Graph Graph::from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                        const std::vector<std::int64_t>& extra_nodes) {
  std::vector<std::pair<std::string, std::string>> text;
  text.reserve(edges.size());
  for (const auto& [a, b] : edges) text.emplace_back(std::to_string(a), std::to_string(b));
  std::vector<std::string> extra;
  extra.reserve(extra_nodes.size());
  for (std::int64_t id : extra_nodes) extra.push_back(std::to_string(id));
  return from_edges(text, extra);
}

Graph Graph::from_index_edges(NodeIndex node_count,
                              const std::vector<std::pair<NodeIndex, NodeIndex>>& edges) {
  std::vector<std::string> ids(node_count);
  for (NodeIndex v = 0; v < node_count; ++v) ids[v] = std::to_string(v);
  return from_nodes_and_edges(std::move(ids), edges);
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  check_node(u);
  check_node(v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeIndex> Graph::find(const std::string& external_id) const {
  auto it = index_.find(external_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_node(NodeIndex v) const {
  if (v >= n_) throw std::out_of_range("node index " + std::to_string(v) + " out of range");
}

bool sorted_subset(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
  if (a.size() > b.size()) return false;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == a.size();
}

NeighborSet closed_neighborhood(const Graph& g, NodeIndex v) {
  g.check_node(v);
  NeighborSet ns;
  ns.owner = v;
  const auto nb = g.neighbors(v);
  ns.members.reserve(nb.size() + 1);
  ns.members.assign(nb.begin(), nb.end());
  ns.members.insert(std::lower_bound(ns.members.begin(), ns.members.end(), v), v);
  return ns;
}

NeighborSet two_hop_neighborhood(const Graph& g, NodeIndex v) {
  g.check_node(v);
  NeighborSet ns;
  ns.owner = v;
  auto& out = ns.members;
  out.push_back(v);
  for (NodeIndex u : g.neighbors(v)) {
    out.push_back(u);
    const auto nb = g.neighbors(u);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ns;
}

PathStats bfs_shortest_paths(const Graph& g, NodeIndex source) {
  g.check_node(source);
  PathStats ps;
  ps.source = source;
  ps.dist.assign(g.node_count(), kUnreachable);
  ps.sigma.assign(g.node_count(), 0);
  ps.dist[source] = 0;
  ps.sigma[source] = 1;
  std::deque<NodeIndex> queue{source};
  while (!queue.empty()) {
    const NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex w : g.neighbors(u)) {
      if (ps.dist[w] == kUnreachable) {
        ps.dist[w] = ps.dist[u] + 1;
        queue.push_back(w);
      }
      if (ps.dist[w] == ps.dist[u] + 1) ps.sigma[w] += ps.sigma[u];
    }
  }
  return ps;
}

namespace {

// One Brandes source: BFS plus reverse dependency accumulation, added into
// acc. Scratch buffers are reused across sources.
struct BrandesScratch {
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeIndex> order;

  explicit BrandesScratch(NodeIndex n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

  void run(const Graph& g, NodeIndex s, std::vector<double>& acc) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::size_t head = 0;
    order.push_back(s);
    while (head < order.size()) {
      const NodeIndex u = order[head++];
      for (NodeIndex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeIndex w = order[i];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (NodeIndex v : g.neighbors(w)) {
        if (dist[v] != kUnreachable && dist[v] + 1 == dist[w]) delta[v] += sigma[v] * coeff;
      }
      acc[w] += delta[w];
    }
  }
};

}  // namespace

BetweennessResult betweenness(const Graph& g, const BetweennessOptions& opt) {
  const NodeIndex n = g.node_count();
  BetweennessResult result;
  result.score.assign(n, 0.0);
  if (n == 0) return result;

  std::vector<NodeIndex> sources;
  if (opt.pivots == 0 || opt.pivots >= n) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0u);
    result.sampled = opt.pivots > 0;
    result.clamped_to_exact = opt.pivots > n;
    result.pivots_used = n;
  } else {
    std::mt19937_64 rng(opt.seed);
    auto picked = sample_without_replacement(n, opt.pivots, rng);
    sources.assign(picked.begin(), picked.end());
    result.sampled = true;
    result.pivots_used = opt.pivots;
  }

  // Fixed striping over source positions keeps the floating-point reduction
  // tree independent of the thread count.
  const unsigned stripes =
      static_cast<unsigned>(std::min<std::size_t>(32, std::max<std::size_t>(1, sources.size())));
  std::vector<std::vector<double>> partial(stripes);

  const unsigned threads = std::max(1u, opt.threads);
  std::atomic<unsigned> next_stripe{0};
  auto worker = [&]() {
    BrandesScratch scratch(n);
    for (;;) {
      const unsigned stripe = next_stripe.fetch_add(1);
      if (stripe >= stripes) return;
      auto& acc = partial[stripe];
      acc.assign(n, 0.0);
      for (std::size_t pos = stripe; pos < sources.size(); pos += stripes) {
        scratch.run(g, sources[pos], acc);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const unsigned used = std::min<unsigned>(threads, stripes);
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const double scale = static_cast<double>(n) / (2.0 * static_cast<double>(sources.size()));
  for (unsigned stripe = 0; stripe < stripes; ++stripe) {
    for (NodeIndex v = 0; v < n; ++v) result.score[v] += partial[stripe][v];
  }
  for (NodeIndex v = 0; v < n; ++v) result.score[v] *= scale;
  return result;
}

namespace {

ClusteringResult clustering_impl(const Graph& g, std::span<const NodeIndex> subset,
                                 EdgeScope scope, bool whole_graph) {
  const NodeIndex n = g.node_count();
  ClusteringResult res;
  res.local.assign(n, 0.0);

  std::vector<std::uint8_t> in_scope(n, whole_graph ? 1 : 0);
  if (!whole_graph) {
    for (NodeIndex v : subset) {
      g.check_node(v);
      in_scope[v] = 1;
    }
  }
  const bool induced = scope == EdgeScope::Induced && !whole_graph;

  auto counted = [&](NodeIndex v) { return !induced || in_scope[v]; };

  // Edge-centric triangle counting: every common neighbor of an edge's
  // endpoints gains one triangle.
  std::vector<std::uint64_t> triangles(n, 0);
  for (NodeIndex u = 0; u < n; ++u) {
    if (!counted(u)) continue;
    const auto nu = g.neighbors(u);
    for (NodeIndex w : nu) {
      if (w <= u || !counted(w)) continue;
      const auto nw = g.neighbors(w);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nw.size()) {
        if (nu[i] == nw[j]) {
          if (counted(nu[i])) ++triangles[nu[i]];
          ++i;
          ++j;
        } else if (nu[i] < nw[j]) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }

  auto scope_degree = [&](NodeIndex v) -> std::uint64_t {
    if (!induced) return g.degree(v);
    std::uint64_t d = 0;
    for (NodeIndex w : g.neighbors(v)) d += in_scope[w];
    return d;
  };

  double sum = 0.0;
  std::size_t count = 0;
  auto eval = [&](NodeIndex v) {
    const std::uint64_t d = scope_degree(v);
    double c = 0.0;
    if (d >= 2) c = 2.0 * static_cast<double>(triangles[v]) / static_cast<double>(d * (d - 1));
    res.local[v] = c;
    sum += c;
    ++count;
  };
  if (whole_graph) {
    for (NodeIndex v = 0; v < n; ++v) eval(v);
  } else {
    for (NodeIndex v : subset) eval(v);
  }
  res.mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
  return res;
}

}  // namespace

ClusteringResult clustering_coefficients(const Graph& g) {
  return clustering_impl(g, {}, EdgeScope::Full, true);
}

ClusteringResult clustering_coefficients(const Graph& g, std::span<const NodeIndex> subset,
                                         EdgeScope scope) {
  return clustering_impl(g, subset, scope, false);
}

namespace {

std::vector<std::vector<NodeIndex>> components_impl(const Graph& g,
                                                    std::span<const NodeIndex> subset,
                                                    bool whole_graph) {
  const NodeIndex n = g.node_count();
  std::vector<std::uint8_t> in_scope(n, whole_graph ? 1 : 0);
  if (!whole_graph) {
    for (NodeIndex v : subset) {
      g.check_node(v);
      in_scope[v] = 1;
    }
  }
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::vector<NodeIndex>> comps;
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < n; ++start) {
    if (!in_scope[start] || visited[start]) continue;
    std::vector<NodeIndex> comp;
    visited[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const NodeIndex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeIndex w : g.neighbors(u)) {
        if (in_scope[w] && !visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::vector<std::pair<NodeIndex, std::size_t>> keys(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    NodeIndex min_rank = g.node_count();
    for (NodeIndex v : comps[i]) min_rank = std::min(min_rank, g.id_rank(v));
    keys[i] = {min_rank, i};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::vector<NodeIndex>> ordered;
  ordered.reserve(comps.size());
  for (const auto& [rank, i] : keys) ordered.push_back(std::move(comps[i]));
  return ordered;
}

}  // namespace

std::vector<std::vector<NodeIndex>> connected_components(const Graph& g) {
  return components_impl(g, {}, true);
}

std::vector<std::vector<NodeIndex>> connected_components(const Graph& g,
                                                         std::span<const NodeIndex> subset) {
  return components_impl(g, subset, false);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::string> ids;
  ids.reserve(sorted.size());
  std::vector<NodeIndex> remap(g.node_count(), 0);
  for (NodeIndex local = 0; local < sorted.size(); ++local) {
    g.check_node(sorted[local]);
    remap[sorted[local]] = local;
    ids.push_back(g.external_id(sorted[local]));
  }
  std::vector<std::uint8_t> keep(g.node_count(), 0);
  for (NodeIndex v : sorted) keep[v] = 1;

  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (NodeIndex u : sorted) {
    for (NodeIndex w : g.neighbors(u)) {
      if (w > u && keep[w]) edges.emplace_back(remap[u], remap[w]);
    }
  }
  return Graph::from_nodes_and_edges(std::move(ids), std::move(edges));
}

std::vector<NodeIndex> shortest_path_between(const Graph& g, NodeIndex s, NodeIndex t) {
  g.check_node(s);
  g.check_node(t);
  const PathStats from_s = bfs_shortest_paths(g, s);
  if (from_s.dist[t] == kUnreachable) return {};
  const PathStats from_t = bfs_shortest_paths(g, t);
  const std::int32_t total = from_s.dist[t];

  std::vector<NodeIndex> path{s};
  NodeIndex cur = s;
  while (cur != t) {
    NodeIndex best = cur;
    bool found = false;
    for (NodeIndex w : g.neighbors(cur)) {
      if (from_s.dist[w] == from_s.dist[cur] + 1 && from_t.dist[w] != kUnreachable &&
          from_s.dist[w] + from_t.dist[w] == total) {
        if (!found || g.id_rank(w) < g.id_rank(best)) {
          best = w;
          found = true;
        }
      }
    }
    path.push_back(best);
    cur = best;
  }
  return path;
}

}  // namespace nodedom
