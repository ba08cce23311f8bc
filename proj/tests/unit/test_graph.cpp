#include <gtest/gtest.h>

#include "campaign/graph.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

WeightedGraph directed_triangle() {
  return make_graph(NetworkKind::retweet, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

TEST(Graph, DirectedTriangle) {
  const auto g = directed_triangle();
  EXPECT_DOUBLE_EQ(graph_density(g.node_count, g.edges.size(), true), 0.5);
  EXPECT_DOUBLE_EQ(mean_shortest_path(g), 1.5);
  EXPECT_EQ(component_sizes(g), (std::vector<std::size_t>{3}));
}

TEST(Graph, StarIsDisassortative) {
  const auto star = make_graph(NetworkKind::hashtag, 4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  EXPECT_NEAR(degree_assortativity(star), -1.0, 1e-12);
  EXPECT_DOUBLE_EQ(graph_density(4, 3, false), 0.5);
}

TEST(Graph, RegularGraphAssortativityIsZero) {
  // every endpoint has the same degree; the correlation is undefined and reported as 0
  EXPECT_EQ(degree_assortativity(directed_triangle()), 0.0);
}

TEST(Graph, ComponentsAndLargest) {
  const auto g = make_graph(NetworkKind::mention, 6, {{0, 1, 1}, {2, 3, 1}, {3, 4, 2}});
  auto sizes = component_sizes(g);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  const auto lcc = largest_component(g);
  EXPECT_EQ(lcc.node_count, 3u);
  EXPECT_EQ(lcc.edges.size(), 2u);
}

TEST(Graph, RetweetDirectionIsOriginatorToSender) {
  std::vector<TweetRecord> tweets{test::retweet(1, "s", "o"), test::retweet(2, "s", "o")};
  const auto g = build_network(tweets, NetworkKind::retweet);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.node_ids[g.edges[0].source], "o");
  EXPECT_EQ(g.node_ids[g.edges[0].target], "s");
  EXPECT_EQ(g.edges[0].weight, 2u);
}

TEST(Graph, MentionAndHashtagNetworks) {
  auto t = test::tweet(1, "a", {"x", "y", "z", "x"});
  t.mentions = {"b", "c"};
  std::vector<TweetRecord> tweets{t};
  const auto m = build_network(tweets, NetworkKind::mention);
  EXPECT_EQ(m.edges.size(), 2u);
  EXPECT_EQ(m.node_ids[m.edges[0].source], "a");
  const auto h = build_network(tweets, NetworkKind::hashtag);
  EXPECT_FALSE(h.directed);
  EXPECT_EQ(h.node_count, 3u);
  EXPECT_EQ(h.edges.size(), 3u);
}

TEST(Graph, FeatureWidths) {
  EXPECT_EQ(network_feature_names(true).size(), kDirectedNetworkFeatures);
  EXPECT_EQ(network_feature_names(false).size(), kUndirectedNetworkFeatures);
  EXPECT_EQ(network_features(directed_triangle()).size(), kDirectedNetworkFeatures);
  const auto empty = network_features(make_graph(NetworkKind::hashtag, 0, {}));
  EXPECT_EQ(empty, std::vector<double>(kUndirectedNetworkFeatures, 0.0));
}

TEST(Graph, SampledShortestPathsOnLargeChain) {
  // a bidirectional chain above the exact limit; sampling keeps the estimate near (n+1)/3
  const std::size_t n = 2500;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, 1});
    edges.push_back({i + 1, i, 1});
  }
  const auto g = make_graph(NetworkKind::mention, n, edges);
  const double est = mean_shortest_path(g);
  EXPECT_NEAR(est, (n + 1) / 3.0, 0.15 * n / 3.0);
  EXPECT_EQ(est, mean_shortest_path(g));
}

}  // namespace
}  // namespace campaign
