#include "adabet/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adabet {

namespace {

constexpr int kSource = 0;
constexpr int kTarget = 1;

}  // namespace

PathSampler::PathSampler(const Graph& graph)
    : graph_(&graph),
      stamp_(graph.num_nodes(), 0),
      side_(graph.num_nodes(), 0),
      dist_(graph.num_nodes(), 0),
      sigma_(graph.num_nodes(), 0.0) {}

void PathSampler::begin_search() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (int side : {kSource, kTarget}) {
    order_[side].clear();
    frontier_begin_[side] = 0;
    frontier_degree_[side] = 0;
  }
  candidates_.clear();
  diag_ = {};
}

void PathSampler::expand(int side, std::uint64_t& edges_visited) {
  auto& order = order_[side];
  const std::size_t begin = frontier_begin_[side];
  const std::size_t end = order.size();
  std::uint64_t next_degree = 0;

  for (std::size_t i = begin; i < end; ++i) {
    const NodeId v = order[i];
    const auto nbrs = side == kSource ? graph_->out_neighbors(v) : graph_->in_neighbors(v);
    edges_visited += nbrs.size();
    for (const NodeId w : nbrs) {
      if (!seen(w)) {
        stamp_[w] = epoch_;
        side_[w] = static_cast<std::uint8_t>(side);
        dist_[w] = dist_[v] + 1;
        sigma_[w] = sigma_[v];
        order.push_back(w);
        next_degree += side == kSource ? graph_->out_degree(w) : graph_->in_degree(w);
      } else if (side_[w] == side) {
        if (dist_[w] == dist_[v] + 1) sigma_[w] += sigma_[v];
      } else if (side == kSource) {
        candidates_.push_back({v, w, dist_[v] + 1 + dist_[w]});
      } else {
        candidates_.push_back({w, v, dist_[w] + 1 + dist_[v]});
      }
    }
  }
  for (std::size_t i = end; i < order.size(); ++i) {
    if (!std::isfinite(sigma_[order[i]])) {
      throw std::overflow_error("shortest path count overflowed double precision");
    }
  }
  frontier_begin_[side] = end;
  frontier_degree_[side] = next_degree;
  if (side == kSource) {
    ++diag_.source_levels;
  } else {
    ++diag_.target_levels;
  }
}

// One step towards the search root: picks a neighbor one level closer with
// probability sigma(neighbor) / sigma(v).
NodeId PathSampler::backtrack_step(NodeId v, int side, Rng& rng) const {
  const auto nbrs = side == kSource ? graph_->in_neighbors(v) : graph_->out_neighbors(v);
  const std::uint32_t want = dist_[v] - 1;
  std::uniform_real_distribution<double> unit(0.0, sigma_[v]);
  const double r = unit(rng);
  double acc = 0.0;
  NodeId last = v;
  for (const NodeId u : nbrs) {
    if (!seen(u) || side_[u] != side || dist_[u] != want) continue;
    acc += sigma_[u];
    last = u;
    if (r < acc) return u;
  }
  return last;
}

void PathSampler::sample_path(NodeId s, NodeId t, Rng& rng, PathSample& out) {
  if (s == t) throw std::invalid_argument("sample_path needs distinct endpoints");
  const auto n = graph_->num_nodes();
  if (s >= n || t >= n) throw std::out_of_range("sample_path endpoint out of range");

  out.s = s;
  out.t = t;
  out.internal_nodes.clear();
  out.connected = false;
  out.path_length = 0;
  out.edges_visited = 0;

  begin_search();
  for (const auto& [root, side] : {std::pair{s, kSource}, std::pair{t, kTarget}}) {
    stamp_[root] = epoch_;
    side_[root] = static_cast<std::uint8_t>(side);
    dist_[root] = 0;
    sigma_[root] = 1.0;
    order_[side].push_back(root);
  }
  frontier_degree_[kSource] = graph_->out_degree(s);
  frontier_degree_[kTarget] = graph_->in_degree(t);

  for (;;) {
    const int side = frontier_degree_[kSource] <= frontier_degree_[kTarget] ? kSource : kTarget;
    expand(side, out.edges_visited);
    if (!candidates_.empty()) break;
    if (frontier_begin_[side] == order_[side].size()) return;  // frontier exhausted
  }

  // Only candidates on a shortest path survive; their common length is d(s,t).
  std::uint32_t best = kUnreachable;
  for (const auto& c : candidates_) best = std::min(best, c.length);
  const auto kept_end = std::remove_if(candidates_.begin(), candidates_.end(),
                                       [best](const Candidate& c) { return c.length != best; });
  diag_.candidates_discarded = static_cast<std::size_t>(candidates_.end() - kept_end);
  candidates_.erase(kept_end, candidates_.end());
  diag_.candidates_kept = candidates_.size();

  cumulative_.resize(candidates_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    total += sigma_[candidates_[i].source_side] * sigma_[candidates_[i].target_side];
    cumulative_[i] = total;
  }
  diag_.candidate_weight = total;

  std::uniform_real_distribution<double> unit(0.0, total);
  const double r = unit(rng);
  const auto pick = std::min<std::size_t>(
      static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), r) -
                               cumulative_.begin()),
      candidates_.size() - 1);
  const Candidate chosen = candidates_[pick];

  out.connected = true;
  out.path_length = best;

  // s-side half, collected from the meeting point back towards s.
  scratch_path_.clear();
  for (NodeId v = chosen.source_side; v != s; v = backtrack_step(v, kSource, rng)) {
    scratch_path_.push_back(v);
  }
  out.internal_nodes.assign(scratch_path_.rbegin(), scratch_path_.rend());
  for (NodeId w = chosen.target_side; w != t; w = backtrack_step(w, kTarget, rng)) {
    out.internal_nodes.push_back(w);
  }
}

PathSample PathSampler::sample_path(NodeId s, NodeId t, Rng& rng) {
  PathSample out;
  sample_path(s, t, rng, out);
  return out;
}

void PathSampler::sample(Rng& rng, PathSample& out) {
  const auto [s, t] = sample_pair(rng, graph_->num_nodes());
  sample_path(s, t, rng, out);
}

PathSample PathSampler::sample(Rng& rng) {
  PathSample out;
  sample(rng, out);
  return out;
}

PathSample balanced_bidirectional_bfs(const Graph& graph, NodeId s, NodeId t, Rng& rng) {
  PathSampler sampler(graph);
  return sampler.sample_path(s, t, rng);
}

PathCount shortest_path_count(const Graph& graph, NodeId s, NodeId t) {
  const auto n = graph.num_nodes();
  if (s >= n || t >= n) throw std::out_of_range("shortest_path_count endpoint out of range");
  if (s == t) return {0, 1.0};

  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<double> sigma(n, 0.0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  dist[s] = 0;
  sigma[s] = 1.0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    if (dist[t] != kUnreachable && dist[v] >= dist[t]) break;
    for (const NodeId w : graph.out_neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }
  return {dist[t], sigma[t]};
}

}  // namespace adabet
