#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "adabet/allocator.hpp"
#include "adabet/bounds.hpp"
#include "adabet/graph.hpp"

namespace adabet {

enum class Mode { absolute, topk };

struct RunConfig {
  Mode mode = Mode::absolute;
  double lambda = 0.01;
  double delta = 0.1;
  /// Rank cutoff, top-k mode only.
  std::size_t k = 1;
  double c = kDefaultC;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Samples between stopping tests; 0 selects max(1, omega / 1000).
  std::uint64_t check_batch = 0;
  std::size_t vd_samples = kDefaultVdSamples;
  double epsilon = kDefaultEpsilon;
};

void validate(const RunConfig& cfg, std::size_t num_nodes);

struct Estimates {
  std::vector<std::uint64_t> counts;
  std::uint64_t tau = 0;
  std::vector<double> btilde;
  std::vector<double> lower;
  std::vector<double> upper;
  std::uint64_t omega = 0;
  std::size_t vd = 0;
  bool stopped_early = false;
  std::uint64_t check_batch = 0;
  std::uint64_t edges_visited = 0;
  /// Sum of internal-node counts over all counted samples.
  std::uint64_t internal_nodes_total = 0;
  DeltaBudgets budgets;
};

enum class RankClass { exact_rank, not_in_topk, approx_within_lambda };

std::string_view to_string(RankClass c);

struct TopkReport {
  std::size_t k = 0;
  std::vector<RankClass> classes;
  /// 1-based bounds on each node's position in the true ranking, from the
  /// nodes whose intervals lie entirely above or below it.
  std::vector<std::size_t> rank_lo;
  std::vector<std::size_t> rank_hi;
  /// Nodes not excluded from the top-k, by decreasing estimate.
  std::vector<NodeId> candidates;
};

/// Per-node target half-widths fed to the budget allocator.
struct TargetPair {
  double lower;
  double upper;
};

/// Node ids sorted by decreasing estimate, ties by increasing id.
std::vector<NodeId> order_by_estimate(std::span<const double> btilde);

/// Targets for the top-k allocator, indexed by position in `sorted_btilde`
/// (which must be nonincreasing). Positions i < k aim to separate node i
/// from its neighbours in the order; later positions aim to fall below the
/// k-th estimate. Adjacent positions whose half-gap is below lambda both get
/// lambda on every side. All targets end up in [lambda, 1].
std::vector<TargetPair> assign_topk_lambdas(std::span<const double> sorted_btilde, std::size_t k,
                                            double lambda);

/// Current estimates and confidence half-widths from raw tallies.
struct IntervalSnapshot {
  std::uint64_t tau = 0;
  std::vector<double> btilde;
  std::vector<double> f;
  std::vector<double> g;

  double lower(NodeId v) const { return btilde[v] - f[v]; }
  double upper(NodeId v) const { return btilde[v] + g[v]; }
};

IntervalSnapshot make_snapshot(std::span<const std::uint64_t> counts, std::uint64_t tau,
                               std::uint64_t omega, const DeltaBudgets& budgets);

/// Absolute-error stop: every node has f <= lambda and g <= lambda.
bool absolute_should_stop(const IntervalSnapshot& snap, double lambda);

/// Top-k stop: each of the first k nodes (by estimate) is within lambda or
/// has an interval disjoint from both neighbours in the order; each later
/// node is within lambda or lies entirely below the k-th node's interval.
/// Additionally every node must be classifiable by classify_topk.
bool topk_should_stop(const IntervalSnapshot& snap, std::size_t k, double lambda);

/// Classification from final intervals [lower, upper].
TopkReport classify_topk(std::span<const double> btilde, std::span<const double> lower,
                         std::span<const double> upper, std::size_t k);

Estimates run_absolute(const Graph& graph, const RunConfig& cfg);
std::pair<Estimates, TopkReport> run_topk(const Graph& graph, const RunConfig& cfg);

}  // namespace adabet
