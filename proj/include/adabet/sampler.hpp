#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "adabet/graph.hpp"
#include "adabet/random.hpp"

namespace adabet {

/// One sampled shortest path between an ordered pair of distinct nodes.
struct PathSample {
  NodeId s = 0;
  NodeId t = 0;
  /// Nodes strictly between s and t, in path order. Empty when s and t are
  /// adjacent or disconnected.
  std::vector<NodeId> internal_nodes;
  bool connected = false;
  /// Hop count of the path; 0 when t is unreachable from s.
  std::uint32_t path_length = 0;
  /// Adjacency entries scanned while growing the two searches.
  std::uint64_t edges_visited = 0;
};

/// Bookkeeping from the most recent search, used by tests and benchmarks.
struct SearchDiagnostics {
  /// Sum of sigma(s,v) * sigma(w,t) over the retained candidate edges (v,w).
  double candidate_weight = 0.0;
  std::size_t candidates_kept = 0;
  std::size_t candidates_discarded = 0;
  std::uint32_t source_levels = 0;
  std::uint32_t target_levels = 0;
};

/// Samples uniformly random shortest paths with a balanced bidirectional BFS.
///
/// The search alternates between a forward BFS from s and a backward BFS from
/// t (reverse arcs when the graph is directed), always expanding the whole
/// frontier whose degree sum is smaller; the s side wins ties. A neighbor
/// already labelled by the opposite side yields a candidate edge. Once a
/// level produces candidates the search stops, keeps only candidates on a
/// shortest s-t path, picks one with probability proportional to
/// sigma(s,v) * sigma(w,t) and completes it by weighted backtracking on both
/// sides.
///
/// A sampler owns its scratch buffers and is meant to be used by one thread.
/// Visit marks are epoch-stamped, so a search costs time proportional to the
/// part of the graph it touches rather than to n.
class PathSampler {
 public:
  explicit PathSampler(const Graph& graph);

  /// Draws a uniform ordered pair and then a uniform shortest path.
  void sample(Rng& rng, PathSample& out);
  PathSample sample(Rng& rng);

  /// Uniform shortest path from s to t. Throws std::invalid_argument if s == t.
  void sample_path(NodeId s, NodeId t, Rng& rng, PathSample& out);
  PathSample sample_path(NodeId s, NodeId t, Rng& rng);

  const SearchDiagnostics& diagnostics() const noexcept { return diag_; }

  /// Nodes labelled by the s-side / t-side search during the last call.
  std::span<const NodeId> visited_from_source() const noexcept { return order_[0]; }
  std::span<const NodeId> visited_from_target() const noexcept { return order_[1]; }

  const Graph& graph() const noexcept { return *graph_; }

 private:
  struct Candidate {
    NodeId source_side;
    NodeId target_side;
    std::uint32_t length;
  };

  bool seen(NodeId v) const noexcept { return stamp_[v] == epoch_; }
  void begin_search();
  void expand(int side, std::uint64_t& edges_visited);
  NodeId backtrack_step(NodeId v, int side, Rng& rng) const;

  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint32_t> dist_;
  std::vector<double> sigma_;
  std::vector<NodeId> order_[2];
  std::size_t frontier_begin_[2] = {0, 0};
  std::uint64_t frontier_degree_[2] = {0, 0};
  std::vector<Candidate> candidates_;
  std::vector<double> cumulative_;
  std::vector<NodeId> scratch_path_;
  SearchDiagnostics diag_;
};

/// Convenience wrapper that builds a throwaway sampler.
PathSample balanced_bidirectional_bfs(const Graph& graph, NodeId s, NodeId t, Rng& rng);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct PathCount {
  std::uint32_t distance = kUnreachable;
  double count = 0.0;
};

/// Exact distance and number of shortest s->t paths from one full BFS.
PathCount shortest_path_count(const Graph& graph, NodeId s, NodeId t);

}  // namespace adabet
