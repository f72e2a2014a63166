#include "nodedom/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nodedom/random.hpp"
#include "nodedom/rng.hpp"
#include "test_util.hpp"

namespace nodedom {
namespace {

namespace tu = testutil;

TEST(GraphBuild, DedupesAndDropsSelfLoops) {
  const auto g = Graph::from_edges(
      std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}});
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(tu::node(g, 1), tu::node(g, 2)));
  EXPECT_TRUE(g.has_edge(tu::node(g, 2), tu::node(g, 3)));
  EXPECT_FALSE(g.has_edge(tu::node(g, 1), tu::node(g, 3)));
}

TEST(GraphBuild, EmptyInput) {
  const auto g = Graph::from_edges(std::vector<std::pair<std::int64_t, std::int64_t>>{});
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GraphBuild, NumericRankOrdersNumerically) {
  // First-appearance indexing differs from ID order; ranks must not.
  const auto g = Graph::from_edges(
      std::vector<std::pair<std::int64_t, std::int64_t>>{{10, 9}, {9, 100}, {100, 2}});
  std::vector<std::string> by_rank;
  for (NodeIndex v : g.nodes_by_rank()) by_rank.push_back(g.external_id(v));
  EXPECT_EQ(by_rank, (std::vector<std::string>{"2", "9", "10", "100"}));
  EXPECT_TRUE(g.numeric_ids());
}

TEST(GraphBuild, StringIdsFallBackToLexicographic) {
  const auto g = Graph::from_edges(
      std::vector<std::pair<std::string, std::string>>{{"b", "a"}, {"a", "c10"}});
  std::vector<std::string> by_rank;
  for (NodeIndex v : g.nodes_by_rank()) by_rank.push_back(g.external_id(v));
  EXPECT_EQ(by_rank, (std::vector<std::string>{"a", "b", "c10"}));
  EXPECT_FALSE(g.numeric_ids());
}

TEST(GraphBuild, ExtraNodesPreserveIsolated) {
  const auto g = Graph::from_edges(std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}},
                                   std::vector<std::int64_t>{7});
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.degree(tu::node(g, 7)), 0u);
}

TEST(ClosedNeighborhood, IncludesOwner) {
  const auto triangle = complete_graph(3);
  const auto ns = closed_neighborhood(triangle, tu::node(triangle, 1));
  EXPECT_EQ(tu::external_ids(triangle, ns.members), (std::vector<std::int64_t>{1, 2, 3}));

  const auto path = tu::path_graph(3);
  const auto ns_path = closed_neighborhood(path, tu::node(path, 1));
  EXPECT_EQ(tu::external_ids(path, ns_path.members), (std::vector<std::int64_t>{1, 2}));
}

TEST(ClosedNeighborhood, IsolatedNodeIsItsOwnNeighborhood) {
  const auto g = Graph::from_edges(std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}},
                                   std::vector<std::int64_t>{9});
  const auto ns = closed_neighborhood(g, tu::node(g, 9));
  EXPECT_EQ(tu::external_ids(g, ns.members), (std::vector<std::int64_t>{9}));
}

TEST(ClosedNeighborhood, OutOfRangeThrows) {
  const auto g = tu::path_graph(3);
  EXPECT_THROW(closed_neighborhood(g, 99), std::out_of_range);
}

TEST(TwoHopNeighborhood, Path) {
  const auto g = tu::path_graph(5);
  const auto ns = two_hop_neighborhood(g, tu::node(g, 1));
  EXPECT_EQ(tu::external_ids(g, ns.members), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(TwoHopNeighborhood, Cycles) {
  const auto c4 = cycle_graph(4);
  EXPECT_EQ(tu::external_ids(c4, two_hop_neighborhood(c4, tu::node(c4, 1)).members),
            (std::vector<std::int64_t>{1, 2, 3, 4}));

  const auto c7 = cycle_graph(7);
  EXPECT_EQ(tu::external_ids(c7, two_hop_neighborhood(c7, tu::node(c7, 1)).members),
            (std::vector<std::int64_t>{1, 2, 3, 6, 7}));
}

TEST(BfsShortestPaths, PathGraph) {
  const auto g = tu::path_graph(3);
  const auto ps = bfs_shortest_paths(g, tu::node(g, 1));
  EXPECT_EQ(ps.dist[tu::node(g, 1)], 0);
  EXPECT_EQ(ps.dist[tu::node(g, 2)], 1);
  EXPECT_EQ(ps.dist[tu::node(g, 3)], 2);
  EXPECT_EQ(ps.sigma[tu::node(g, 1)], 1u);
  EXPECT_EQ(ps.sigma[tu::node(g, 3)], 1u);
}

TEST(BfsShortestPaths, CycleMultiplicity) {
  const auto g = cycle_graph(4);
  const auto ps = bfs_shortest_paths(g, tu::node(g, 1));
  EXPECT_EQ(ps.dist[tu::node(g, 3)], 2);
  EXPECT_EQ(ps.sigma[tu::node(g, 3)], 2u);
}

TEST(BfsShortestPaths, DisconnectedIsUnreachable) {
  const auto g = Graph::from_edges(std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}},
                                   std::vector<std::int64_t>{3});
  const auto ps = bfs_shortest_paths(g, tu::node(g, 1));
  EXPECT_EQ(ps.dist[tu::node(g, 3)], kUnreachable);
  EXPECT_EQ(ps.sigma[tu::node(g, 3)], 0u);
}

TEST(BfsShortestPaths, DistanceSymmetryOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = erdos_renyi(18, 0.2, 900 + seed);
    for (NodeIndex s = 0; s < g.node_count(); ++s) {
      const auto from_s = bfs_shortest_paths(g, s);
      for (NodeIndex t = 0; t < s; ++t) {
        EXPECT_EQ(from_s.dist[t], bfs_shortest_paths(g, t).dist[s]);
      }
    }
  }
}

TEST(Betweenness, PathAndStar) {
  const auto path = tu::path_graph(3);
  const auto bc_path = betweenness(path);
  EXPECT_DOUBLE_EQ(bc_path.score[tu::node(path, 2)], 1.0);
  EXPECT_DOUBLE_EQ(bc_path.score[tu::node(path, 1)], 0.0);

  const auto star = star_graph(3);
  const auto bc_star = betweenness(star);
  EXPECT_DOUBLE_EQ(bc_star.score[tu::node(star, 1)], 3.0);
}

TEST(Betweenness, CycleC4SplitsPairs) {
  const auto g = cycle_graph(4);
  const auto bc = betweenness(g);
  for (NodeIndex v = 0; v < g.node_count(); ++v) EXPECT_DOUBLE_EQ(bc.score[v], 0.5);
}

TEST(Betweenness, MatchesPathEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = erdos_renyi(10, 0.3, 7000 + seed);
    const auto expected = tu::naive_betweenness(g);
    const auto got = betweenness(g);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      EXPECT_NEAR(got.score[v], expected[v], 1e-9) << "seed " << seed << " node " << v;
    }
  }
}

TEST(Betweenness, SampledAllPivotsEqualsExact) {
  const auto g = erdos_renyi(30, 0.2, 11);
  const auto exact = betweenness(g);
  BetweennessOptions opt;
  opt.pivots = g.node_count();
  opt.seed = 5;
  const auto sampled = betweenness(g, opt);
  EXPECT_EQ(exact.score, sampled.score);
  EXPECT_FALSE(sampled.clamped_to_exact);
}

TEST(Betweenness, OverlargePivotCountClampsWithWarning) {
  const auto g = erdos_renyi(10, 0.3, 3);
  BetweennessOptions opt;
  opt.pivots = 50;
  const auto res = betweenness(g, opt);
  EXPECT_TRUE(res.clamped_to_exact);
  EXPECT_EQ(res.pivots_used, g.node_count());
  EXPECT_EQ(res.score, betweenness(g).score);
}

TEST(Betweenness, ThreadCountDoesNotChangeResult) {
  const auto g = erdos_renyi(60, 0.15, 21);
  BetweennessOptions one;
  one.threads = 1;
  BetweennessOptions four;
  four.threads = 4;
  EXPECT_EQ(betweenness(g, one).score, betweenness(g, four).score);

  BetweennessOptions sampled1{.pivots = 17, .seed = 9, .threads = 1};
  BetweennessOptions sampled4{.pivots = 17, .seed = 9, .threads = 4};
  EXPECT_EQ(betweenness(g, sampled1).score, betweenness(g, sampled4).score);
}

TEST(Clustering, TriangleAndStar) {
  const auto triangle = complete_graph(3);
  const auto res = clustering_coefficients(triangle);
  EXPECT_DOUBLE_EQ(res.mean, 1.0);
  for (NodeIndex v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(res.local[v], 1.0);

  const auto star = star_graph(5);
  EXPECT_DOUBLE_EQ(clustering_coefficients(star).mean, 0.0);
}

TEST(Clustering, SquareWithEarHandValues) {
  const auto g = tu::square_with_ear();
  const auto res = clustering_coefficients(g);
  EXPECT_NEAR(res.local[tu::node(g, 1)], 1.0 / 6.0, 1e-12);
  EXPECT_DOUBLE_EQ(res.local[tu::node(g, 5)], 1.0);
  EXPECT_NEAR(res.mean, 13.0 / 36.0, 1e-12);
}

TEST(Clustering, InducedScopeIgnoresOutsideEdges) {
  // Ear triangle {1,5,6}: induced on {5,6} the edge 1-5/1-6 disappears,
  // degrees drop below 2, coefficients become 0.
  const auto g = tu::square_with_ear();
  const auto subset = tu::nodes(g, {5, 6});
  const auto res = clustering_coefficients(g, subset, EdgeScope::Induced);
  EXPECT_DOUBLE_EQ(res.mean, 0.0);
  const auto full = clustering_coefficients(g, subset, EdgeScope::Full);
  EXPECT_DOUBLE_EQ(full.mean, 1.0);
}

TEST(ConnectedComponents, BasicsAndSubset) {
  const auto two_edges = Graph::from_edges(
      std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {3, 4}});
  const auto comps = connected_components(two_edges);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 2u);
  EXPECT_EQ(comps[1].size(), 2u);

  const auto g = tu::square_with_ear();
  const auto periphery = tu::nodes(g, {5, 6});
  const auto sub = connected_components(g, periphery);
  ASSERT_EQ(sub.size(), 1u);
  EXPECT_EQ(tu::external_ids(g, sub[0]), (std::vector<std::int64_t>{5, 6}));

  EXPECT_TRUE(connected_components(g, std::vector<NodeIndex>{}).empty());
}

TEST(SortedSubset, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 seeds(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<NodeIndex>(2 + uniform_index(seeds, 49));
    const auto g = erdos_renyi(n, 0.25, seeds());
    const auto u = static_cast<NodeIndex>(uniform_index(seeds, n));
    const auto w = static_cast<NodeIndex>(uniform_index(seeds, n));
    const auto nu = closed_neighborhood(g, u).members;
    const auto nw = closed_neighborhood(g, w).members;
    const auto su = tu::naive_closed(g, u);
    const auto sw = tu::naive_closed(g, w);
    EXPECT_EQ(sorted_subset(nu, nw), std::includes(sw.begin(), sw.end(), su.begin(), su.end()));
  }
}

TEST(Betweenness, PairDecompositionIdentity) {
  // Sum of betweenness equals the total expected interior-vertex count over
  // all connected pairs, cross-checked by path enumeration.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = erdos_renyi(11, 0.3, 500 + seed);
    const auto bc = betweenness(g);
    double total = 0;
    for (NodeIndex v = 0; v < g.node_count(); ++v) total += bc.score[v];
    double expected = 0;
    for (NodeIndex s = 0; s < g.node_count(); ++s) {
      for (NodeIndex t = s + 1; t < g.node_count(); ++t) {
        const auto paths = tu::all_shortest_paths(g, s, t);
        if (paths.empty()) continue;
        double interior = 0;
        for (const auto& p : paths) interior += static_cast<double>(p.size()) - 2.0;
        expected += interior / static_cast<double>(paths.size());
      }
    }
    EXPECT_NEAR(total, expected, 1e-9);
  }
}

TEST(ShortestPathBetween, DeterministicTieBreak) {
  const auto g = tu::square_with_ear();
  const auto path = shortest_path_between(g, tu::node(g, 5), tu::node(g, 3));
  ASSERT_EQ(path.size(), 4u);
  EXPECT_EQ(g.external_id(path[0]), "5");
  EXPECT_EQ(g.external_id(path[1]), "1");
  EXPECT_EQ(g.external_id(path[2]), "2");  // 2 beats 4 on ID order
  EXPECT_EQ(g.external_id(path[3]), "3");
}

TEST(InducedSubgraph, KeepsIdsAndEdges) {
  const auto g = tu::square_with_ear();
  const auto sub = induced_subgraph(g, tu::nodes(g, {1, 5, 6}));
  EXPECT_EQ(sub.node_count(), 3u);
  EXPECT_EQ(sub.edge_count(), 3u);
  EXPECT_TRUE(sub.find("5").has_value());
}

}  // namespace
}  // namespace nodedom
