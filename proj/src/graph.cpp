#include "campaign/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "campaign/stats.hpp"

namespace campaign {
namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Compressed adjacency without self-loops. Undirected graphs list both directions.
struct Adjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;
};

Adjacency out_adjacency(const WeightedGraph& g) {
  Adjacency adj;
  adj.offsets.assign(g.node_count + 1, 0);
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    ++adj.offsets[e.source + 1];
    if (!g.directed) ++adj.offsets[e.target + 1];
  }
  std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
  adj.targets.resize(adj.offsets.back());
  std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    adj.targets[fill[e.source]++] = e.target;
    if (!g.directed) adj.targets[fill[e.target]++] = e.source;
  }
  return adj;
}

std::size_t non_loop_edges(const WeightedGraph& g) {
  return static_cast<std::size_t>(
      std::count_if(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.source != e.target; }));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0 || syy <= 0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

void append_summary(std::vector<double>& out, std::vector<double>& values) {
  auto s = summarize8_inplace(values);
  for (double v : s.as_array()) out.push_back(v);
}

// Breadth-first distances from `source`; accumulates sum and count of reached nodes.
void bfs_accumulate(const Adjacency& adj, std::uint32_t source, std::vector<std::int32_t>& dist,
                    std::vector<std::uint32_t>& queue, double& sum, std::uint64_t& count) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[source] = 0;
  queue.clear();
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const auto v = adj.targets[k];
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      sum += dist[v];
      ++count;
      queue.push_back(v);
    }
  }
}

}  // namespace

std::string_view to_string(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::retweet: return "retweet";
    case NetworkKind::mention: return "mention";
    case NetworkKind::hashtag: return "hashtag";
  }
  return "unknown";
}

std::uint64_t WeightedGraph::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& e : edges) total += e.weight;
  return total;
}

WeightedGraph make_graph(NetworkKind kind, std::size_t node_count, std::vector<Edge> edges) {
  WeightedGraph g;
  g.kind = kind;
  g.directed = is_directed(kind);
  g.node_count = node_count;
  if (!g.directed) {
    for (auto& e : edges) {
      if (e.target < e.source) std::swap(e.source, e.target);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  g.edges = std::move(edges);
  return g;
}

WeightedGraph build_network(std::span<const TweetRecord> tweets, NetworkKind kind) {
  GraphBuilder<std::string> builder(kind);
  for (const auto& t : tweets) {
    switch (kind) {
      case NetworkKind::retweet:
        if (t.is_retweet && t.originator) builder.add(t.originator->user_id, t.sender.user_id);
        break;
      case NetworkKind::mention:
        for (const auto& m : t.mentions) builder.add(t.sender.user_id, m);
        break;
      case NetworkKind::hashtag: {
        std::vector<std::string> tags = t.hashtags;
        std::sort(tags.begin(), tags.end());
        tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
        for (std::size_t i = 0; i < tags.size(); ++i) {
          for (std::size_t j = i + 1; j < tags.size(); ++j) builder.add(tags[i], tags[j]);
        }
        break;
      }
    }
  }
  return builder.build();
}

std::vector<std::string> network_feature_names(bool directed) {
  std::vector<std::string> names = {"nodes", "edges"};
  auto add_dist = [&](std::string_view base) {
    for (auto stat : kSummaryStatNames) names.push_back(std::string(base) + "." + std::string(stat));
  };
  add_dist("strength");
  if (directed) {
    add_dist("in_strength");
    add_dist("out_strength");
  }
  add_dist("component_size");
  for (const char* n : {"density", "lcc_density", "assortativity", "lcc_assortativity", "lcc_mean_shortest_path"}) {
    names.emplace_back(n);
  }
  return names;
}

double graph_density(std::size_t nodes, std::size_t edges, bool directed) {
  if (nodes < 2) return 0.0;
  const double pairs = static_cast<double>(nodes) * static_cast<double>(nodes - 1);
  return (directed ? 1.0 : 2.0) * static_cast<double>(edges) / pairs;
}

double degree_assortativity(const WeightedGraph& g) {
  std::vector<double> out_deg(g.node_count, 0), in_deg(g.node_count, 0);
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    out_deg[e.source] += 1;
    in_deg[e.target] += 1;
  }
  std::vector<double> xs, ys;
  xs.reserve(2 * g.edges.size());
  ys.reserve(2 * g.edges.size());
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    if (g.directed) {
      xs.push_back(out_deg[e.source]);
      ys.push_back(in_deg[e.target]);
    } else {
      const double du = out_deg[e.source] + in_deg[e.source];
      const double dv = out_deg[e.target] + in_deg[e.target];
      xs.push_back(du);
      ys.push_back(dv);
      xs.push_back(dv);
      ys.push_back(du);
    }
  }
  return pearson(xs, ys);
}

std::vector<std::size_t> component_sizes(const WeightedGraph& g) {
  DisjointSets sets(g.node_count);
  for (const auto& e : g.edges) sets.unite(e.source, e.target);
  std::vector<std::size_t> size_by_root(g.node_count, 0);
  for (std::uint32_t v = 0; v < g.node_count; ++v) ++size_by_root[sets.find(v)];
  std::vector<std::size_t> sizes;
  for (auto s : size_by_root) {
    if (s > 0) sizes.push_back(s);
  }
  return sizes;
}

WeightedGraph largest_component(const WeightedGraph& g) {
  if (g.node_count == 0) return g;
  DisjointSets sets(g.node_count);
  for (const auto& e : g.edges) sets.unite(e.source, e.target);
  std::vector<std::size_t> size_by_root(g.node_count, 0);
  for (std::uint32_t v = 0; v < g.node_count; ++v) ++size_by_root[sets.find(v)];
  // ties go to the component containing the lowest node id (roots are minimal)
  const auto best_root = static_cast<std::uint32_t>(
      std::max_element(size_by_root.begin(), size_by_root.end()) - size_by_root.begin());

  std::vector<std::uint32_t> remap(g.node_count, UINT32_MAX);
  WeightedGraph lcc;
  lcc.kind = g.kind;
  lcc.directed = g.directed;
  for (std::uint32_t v = 0; v < g.node_count; ++v) {
    if (sets.find(v) != best_root) continue;
    remap[v] = static_cast<std::uint32_t>(lcc.node_count++);
    if (!g.node_ids.empty()) lcc.node_ids.push_back(g.node_ids[v]);
  }
  for (const auto& e : g.edges) {
    if (remap[e.source] != UINT32_MAX) lcc.edges.push_back({remap[e.source], remap[e.target], e.weight});
  }
  return lcc;  // order is preserved since remap is monotone
}

double mean_shortest_path(const WeightedGraph& g) {
  if (g.node_count < 2) return 0.0;
  const Adjacency adj = out_adjacency(g);
  std::vector<std::uint32_t> sources(g.node_count);
  std::iota(sources.begin(), sources.end(), 0u);
  if (g.node_count > kExactShortestPathLimit) {
    std::mt19937_64 rng(0x5eedULL);
    // partial Fisher-Yates: first kShortestPathSamples entries are a uniform sample
    for (std::size_t i = 0; i < kShortestPathSamples; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, sources.size() - 1);
      std::swap(sources[i], sources[pick(rng)]);
    }
    sources.resize(kShortestPathSamples);
  }
  std::vector<std::int32_t> dist(g.node_count);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.node_count);
  double sum = 0;
  std::uint64_t count = 0;
  for (auto s : sources) bfs_accumulate(adj, s, dist, queue, sum, count);
  return count ? sum / static_cast<double>(count) : 0.0;
}

std::vector<double> network_features(const WeightedGraph& g) {
  const std::size_t width = g.directed ? kDirectedNetworkFeatures : kUndirectedNetworkFeatures;
  std::vector<double> out;
  out.reserve(width);
  if (g.node_count == 0) {
    out.assign(width, 0.0);
    return out;
  }
  out.push_back(static_cast<double>(g.node_count));
  out.push_back(static_cast<double>(g.edges.size()));

  std::vector<double> in_s(g.node_count, 0), out_s(g.node_count, 0), total(g.node_count);
  for (const auto& e : g.edges) {
    out_s[e.source] += e.weight;
    in_s[e.target] += e.weight;
  }
  for (std::size_t v = 0; v < g.node_count; ++v) total[v] = in_s[v] + out_s[v];
  append_summary(out, total);
  if (g.directed) {
    append_summary(out, in_s);
    append_summary(out, out_s);
  }

  auto sizes = component_sizes(g);
  std::vector<double> size_values(sizes.begin(), sizes.end());
  append_summary(out, size_values);

  const WeightedGraph lcc = largest_component(g);
  out.push_back(graph_density(g.node_count, non_loop_edges(g), g.directed));
  out.push_back(graph_density(lcc.node_count, non_loop_edges(lcc), lcc.directed));
  out.push_back(degree_assortativity(g));
  out.push_back(degree_assortativity(lcc));
  out.push_back(mean_shortest_path(lcc));
  return out;
}

}  // namespace campaign
