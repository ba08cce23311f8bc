#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "campaign/types.hpp"

namespace campaign {

enum class NetworkKind { retweet, mention, hashtag };

std::string_view to_string(NetworkKind kind);
inline bool is_directed(NetworkKind kind) { return kind != NetworkKind::hashtag; }

struct Edge {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::uint32_t weight = 0;

  bool operator==(const Edge&) const = default;
};

/// Interaction network with dense node ids. Edges are sorted by (source,
/// target); undirected edges are stored with source < target.
struct WeightedGraph {
  NetworkKind kind = NetworkKind::retweet;
  bool directed = true;
  std::vector<std::string> node_ids;  // optional names, index = node id
  std::size_t node_count = 0;
  std::vector<Edge> edges;

  std::uint64_t total_weight() const;
};

/// Accumulates weighted edges between arbitrary keys and assigns dense ids in
/// first-seen order.
template <typename Key, typename Hash = std::hash<Key>>
class GraphBuilder {
 public:
  explicit GraphBuilder(NetworkKind kind) : kind_(kind) {}

  void add(const Key& from, const Key& to) {
    if (!is_directed(kind_) && from == to) return;  // co-occurrence has no loops
    std::uint32_t a = intern(from), b = intern(to);
    if (!is_directed(kind_) && b < a) std::swap(a, b);
    ++weights_[(static_cast<std::uint64_t>(a) << 32) | b];
  }

  WeightedGraph build() const;
  const std::vector<Key>& keys() const { return keys_; }

 private:
  std::uint32_t intern(const Key& key) {
    auto [it, inserted] = ids_.try_emplace(key, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) keys_.push_back(key);
    return it->second;
  }

  NetworkKind kind_;
  std::unordered_map<Key, std::uint32_t, Hash> ids_;
  std::vector<Key> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> weights_;
};

WeightedGraph make_graph(NetworkKind kind, std::size_t node_count, std::vector<Edge> edges);

template <typename Key, typename Hash>
WeightedGraph GraphBuilder<Key, Hash>::build() const {
  std::vector<Edge> edges;
  edges.reserve(weights_.size());
  for (auto [key, w] : weights_) {
    edges.push_back({static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key & 0xffffffffu), w});
  }
  WeightedGraph g = make_graph(kind_, keys_.size(), std::move(edges));
  if constexpr (std::is_convertible_v<Key, std::string>) {
    g.node_ids.assign(keys_.begin(), keys_.end());
  }
  return g;
}

/// Retweet: originator -> sender. Mention: author -> mentioned user.
/// Hashtag: one undirected edge per unordered pair of distinct tags in a tweet.
WeightedGraph build_network(std::span<const TweetRecord> tweets, NetworkKind kind);

inline constexpr std::size_t kDirectedNetworkFeatures = 39;
inline constexpr std::size_t kUndirectedNetworkFeatures = 23;
inline constexpr std::size_t kExactShortestPathLimit = 2000;
inline constexpr std::size_t kShortestPathSamples = 100;

/// Feature names for one network, in emission order, without the
/// "network.<kind>." prefix.
std::vector<std::string> network_feature_names(bool directed);

/// 39 values for directed graphs, 23 for undirected. Empty graph -> zeros.
std::vector<double> network_features(const WeightedGraph& graph);

// Individual metrics, exposed for testing.
double graph_density(std::size_t nodes, std::size_t edges, bool directed);
double degree_assortativity(const WeightedGraph& graph);
/// Weakly connected component sizes, one entry per component.
std::vector<std::size_t> component_sizes(const WeightedGraph& graph);
WeightedGraph largest_component(const WeightedGraph& graph);
/// Mean BFS distance over reachable ordered pairs; sampled above the exact limit.
double mean_shortest_path(const WeightedGraph& graph);

}  // namespace campaign
