#include "adabet/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace adabet {

namespace {

constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();

struct BrandesScratch {
  explicit BrandesScratch(std::size_t n) : dist(n), sigma(n), dependency(n) { order.reserve(n); }
  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<double> dependency;
  std::vector<NodeId> order;
};

void accumulate_source(const Graph& graph, NodeId s, BrandesScratch& scratch, std::vector<double>& score) {
  auto& [dist, sigma, dependency, order] = scratch;
  std::fill(dist.begin(), dist.end(), kUnseen);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(dependency.begin(), dependency.end(), 0.0);
  order.clear();

  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (const NodeId w : graph.out_neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }
  // BFS order reversed is an order of nonincreasing distance.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId w = *it;
    for (const NodeId v : graph.in_neighbors(w)) {
      if (dist[v] != kUnseen && dist[v] + 1 == dist[w]) {
        dependency[v] += sigma[v] / sigma[w] * (1.0 + dependency[w]);
      }
    }
    if (w != s) score[w] += dependency[w];
  }
}

std::vector<std::uint32_t> bfs_distances(const Graph& graph, NodeId root, bool forward) {
  std::vector<std::uint32_t> dist(graph.num_nodes(), kUnseen);
  std::vector<NodeId> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const NodeId w : forward ? graph.out_neighbors(v) : graph.in_neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Depth-first walk over arcs that stay on some shortest s-t path; each
// completed walk is one shortest path and credits its internal nodes.
void enumerate_paths(const Graph& graph, NodeId v, NodeId t, const std::vector<std::uint32_t>& from_s,
                     const std::vector<std::uint32_t>& to_t, std::uint32_t length, std::vector<NodeId>& path,
                     std::vector<double>& through, double& total) {
  if (v == t) {
    total += 1.0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) through[path[i]] += 1.0;
    return;
  }
  for (const NodeId w : graph.out_neighbors(v)) {
    if (from_s[w] != from_s[v] + 1 || to_t[w] == kUnseen || from_s[w] + to_t[w] != length) continue;
    path.push_back(w);
    enumerate_paths(graph, w, t, from_s, to_t, length, path, through, total);
    path.pop_back();
  }
}

}  // namespace

ExactScores brandes(const Graph& graph, unsigned workers) {
  const std::size_t n = graph.num_nodes();
  ExactScores score(n, 0.0);
  if (n < 2) return score;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));

  if (workers == 1) {
    BrandesScratch scratch(n);
    for (NodeId s = 0; s < n; ++s) accumulate_source(graph, s, scratch, score);
  } else {
    std::vector<std::vector<double>> partial(workers, std::vector<double>(n, 0.0));
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          BrandesScratch scratch(n);
          for (std::size_t s = w; s < n; s += workers) {
            accumulate_source(graph, static_cast<NodeId>(s), scratch, partial[w]);
          }
        });
      }
    }
    for (const auto& p : partial) {
      for (std::size_t v = 0; v < n; ++v) score[v] += p[v];
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  for (auto& x : score) x /= pairs;
  return score;
}

ExactScores brute_force_bc(const Graph& graph) {
  const std::size_t n = graph.num_nodes();
  if (n > kBruteForceMaxNodes) {
    throw std::invalid_argument("brute_force_bc is limited to " + std::to_string(kBruteForceMaxNodes) +
                                " nodes");
  }
  ExactScores score(n, 0.0);
  if (n < 2) return score;

  std::vector<std::vector<std::uint32_t>> from(n);
  std::vector<std::vector<std::uint32_t>> to(n);
  for (NodeId v = 0; v < n; ++v) {
    from[v] = bfs_distances(graph, v, true);
    to[v] = bfs_distances(graph, v, false);
  }
  std::vector<NodeId> path;
  std::vector<double> through(n);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = 0; t < n; ++t) {
      if (s == t || from[s][t] == kUnseen) continue;
      std::fill(through.begin(), through.end(), 0.0);
      double total = 0.0;
      path.assign(1, s);
      enumerate_paths(graph, s, t, from[s], to[t], from[s][t], path, through, total);
      for (NodeId v = 0; v < n; ++v) score[v] += through[v] / total;
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  for (auto& x : score) x /= pairs;
  return score;
}

}  // namespace adabet
