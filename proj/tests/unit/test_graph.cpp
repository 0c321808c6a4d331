#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "genlouvain/graph.hpp"
#include "genlouvain/io.hpp"
#include "support/random_graphs.hpp"

namespace genlouvain {
namespace {

using testing::graph_from_pairs;
using testing::random_graph;
using testing::random_partition;

std::map<CommunityId, double> as_map(const std::vector<std::pair<CommunityId, double>>& v) {
  return {v.begin(), v.end()};
}

double degree_sum(const Graph& g) {
  return std::accumulate(g.degrees().begin(), g.degrees().end(), 0.0);
}

TEST(Graph, IsolatedNodeHasZeroDegree) {
  const Graph g = graph_from_pairs(3, {{0, 1}});
  EXPECT_EQ(g.weighted_degree(2), 0.0);
}

TEST(Graph, TriangleDegreesAreTwo) {
  const Graph g = testing::triangle();
  for (NodeId i = 0; i < 3; ++i) EXPECT_EQ(weighted_degree(g, i), 2.0);
  EXPECT_EQ(g.globals().two_m, 6.0);
}

TEST(Graph, KarateDegreesSumToTwiceEdgeCount) {
  const auto karate = io::read_edge_list_file(GENLOUVAIN_TEST_DATA "/karate.txt");
  EXPECT_EQ(karate.graph.num_nodes(), 34u);
  EXPECT_EQ(degree_sum(karate.graph), 156.0);
}

TEST(Graph, SelfLoopCountsOnceInDegree) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 0, 3.0}, {0, 1, 1.0}});
  EXPECT_EQ(g.loop_weight(0), 3.0);
  EXPECT_EQ(g.weighted_degree(0), 4.0);
  EXPECT_EQ(g.globals().two_m, 5.0);
  EXPECT_EQ(g.globals().w_max, 3.0);
}

TEST(Graph, DuplicateEdgesAreSummed) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1, 2.0}, {1, 0, 3.0}});
  ASSERT_EQ(g.num_links(), 1u);
  EXPECT_EQ(g.neighbor_weights(0)[0], 5.0);
  EXPECT_EQ(g.neighbor_weights(1)[0], 5.0);
  EXPECT_FALSE(g.globals().unit_weights);
}

TEST(Graph, EdgelessGraphHasUnitMaxWeight) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{});
  EXPECT_EQ(g.globals().w_max, 1.0);
  EXPECT_EQ(g.globals().two_m, 0.0);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph({.n = 30, .edge_probability = 0.2, .unit_weights = false,
                                  .loop_probability = 0.2},
                                 rng);
    std::map<std::pair<NodeId, NodeId>, double> seen;
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      auto nbrs = g.neighbors(i);
      EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        EXPECT_NE(nbrs[k], i);
        seen[{i, nbrs[k]}] = g.neighbor_weights(i)[k];
      }
    }
    for (const auto& [key, w] : seen) EXPECT_EQ((seen.at({key.second, key.first})), w);
    EXPECT_DOUBLE_EQ(degree_sum(g), g.globals().two_m);
  }
}

TEST(NeighborCommunityWeights, AllNeighborsInOneCommunity) {
  const Graph g = Graph::from_edges(
      4, std::vector<Edge>{{0, 1, 2.0}, {0, 2, 1.0}, {0, 3, 2.0}});
  const Partition p(std::vector<CommunityId>{0, 1, 1, 1});
  EXPECT_EQ(as_map(neighbor_community_weights(g, 0, p)), (std::map<CommunityId, double>{{0, 0.0}, {1, 5.0}}));
}

TEST(NeighborCommunityWeights, TriangleOfSingletons) {
  const Graph g = testing::triangle();
  const auto w = neighbor_community_weights(g, 0, Partition::singletons(3));
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], (std::pair<CommunityId, double>{0, 0.0}));  // own community first
  EXPECT_EQ(as_map(w), (std::map<CommunityId, double>{{0, 0.0}, {1, 1.0}, {2, 1.0}}));
}

TEST(NeighborCommunityWeights, PathMiddleNode) {
  const Graph g = graph_from_pairs(3, {{0, 1}, {1, 2}});
  const Partition p(std::vector<CommunityId>{0, 0, 1});
  EXPECT_EQ(as_map(neighbor_community_weights(g, 1, p)), (std::map<CommunityId, double>{{0, 1.0}, {1, 1.0}}));
}

TEST(Aggregate, SingletonPartitionIsIdentity) {
  std::mt19937_64 rng(3);
  const Graph g = random_graph({.n = 12, .edge_probability = 0.4, .unit_weights = false,
                                .loop_probability = 0.3},
                               rng);
  const Graph meta = aggregate(g, Partition::singletons(g.num_nodes()));
  ASSERT_EQ(meta.num_nodes(), g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    EXPECT_EQ(meta.loop_weight(i), g.loop_weight(i));
    EXPECT_TRUE(std::ranges::equal(meta.neighbors(i), g.neighbors(i)));
    EXPECT_TRUE(std::ranges::equal(meta.neighbor_weights(i), g.neighbor_weights(i)));
  }
}

TEST(Aggregate, TriangleIntoOneNode) {
  const Graph meta = aggregate(testing::triangle(), Partition(std::vector<CommunityId>{0, 0, 0}));
  ASSERT_EQ(meta.num_nodes(), 1u);
  EXPECT_EQ(meta.loop_weight(0), 6.0);
  EXPECT_EQ(meta.node_size(0), 3u);
  EXPECT_EQ(meta.num_links(), 0u);
}

TEST(Aggregate, TwoDisjointEdges) {
  const Graph g = graph_from_pairs(4, {{0, 1}, {2, 3}});
  const Graph meta = aggregate(g, Partition(std::vector<CommunityId>{0, 0, 1, 1}));
  ASSERT_EQ(meta.num_nodes(), 2u);
  EXPECT_EQ(meta.loop_weight(0), 2.0);
  EXPECT_EQ(meta.loop_weight(1), 2.0);
  EXPECT_EQ(meta.num_links(), 0u);
}

TEST(Aggregate, SharesLevelZeroConstants) {
  const Graph g = testing::two_triangles();
  const Graph meta = aggregate(g, Partition(std::vector<CommunityId>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(meta.shared_globals().get(), g.shared_globals().get());
}

TEST(Aggregate, ConservesMassSizeAndAux) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    Graph g = random_graph({.n = n, .edge_probability = 0.3, .unit_weights = trial % 2 == 0,
                            .loop_probability = 0.1},
                           rng);
    std::vector<double> aux(n);
    for (auto& a : aux) a = static_cast<double>(rng() % 7);
    g = g.with_aux(aux);
    const Partition p = random_partition(n, 1 + rng() % n, rng);
    const Graph meta = aggregate(g, p);
    EXPECT_NEAR(degree_sum(meta), g.globals().two_m, 1e-9 * g.globals().two_m);
    const auto sizes = meta.sizes();
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}), g.globals().n0);
    EXPECT_NEAR(std::accumulate(meta.aux().begin(), meta.aux().end(), 0.0), g.globals().aux_sum, 1e-9);
  }
}

TEST(Aggregate, SecondSingletonAggregationIsIdempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph({.n = 25, .edge_probability = 0.2, .unit_weights = false}, rng);
    const Graph once = aggregate(g, random_partition(25, 6, rng));
    const Graph twice = aggregate(once, Partition::singletons(once.num_nodes()));
    ASSERT_EQ(twice.num_nodes(), once.num_nodes());
    for (NodeId i = 0; i < once.num_nodes(); ++i) {
      EXPECT_EQ(twice.loop_weight(i), once.loop_weight(i));
      EXPECT_EQ(twice.node_size(i), once.node_size(i));
      EXPECT_TRUE(std::ranges::equal(twice.neighbor_weights(i), once.neighbor_weights(i)));
    }
  }
}

TEST(Partition, CompactionPreservesMembership) {
  const Partition p(std::vector<CommunityId>{7, 3, 7, 9, 3});
  const Partition c = p.compacted();
  EXPECT_EQ(c, Partition(std::vector<CommunityId>{0, 1, 0, 2, 1}));
  EXPECT_TRUE(c.is_compact());
  EXPECT_FALSE(p.is_compact());
  EXPECT_EQ(c.num_communities(), 3u);
}

}  // namespace
}  // namespace genlouvain
