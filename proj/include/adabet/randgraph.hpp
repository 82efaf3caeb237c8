#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adabet/graph.hpp"
#include "adabet/random.hpp"

namespace adabet {

struct WeightSequence {
  std::vector<double> weights;
  double total = 0.0;
};

WeightSequence make_weights(std::vector<double> weights);
WeightSequence constant_weights(std::size_t n, double weight);

/// i.i.d. continuous Pareto weights: Pr(W >= x) = (x / w_min)^-(beta - 1) for
/// x >= w_min. Requires beta > 2 (finite mean) and w_min >= 1.
WeightSequence powerlaw_weights(std::size_t n, double beta, double w_min, Rng& rng);

/// Configuration model: round(w_v) stubs per node (ties to even), one extra
/// stub on a random node if the total is odd, uniform perfect matching.
/// Self-loops and multi-edges are dropped; `stats` reports how many.
Graph gen_configuration_model(const WeightSequence& w, Rng& rng, IngestStats* stats = nullptr);

/// Edge probability kernels of the rank-1 inhomogeneous random graph.
enum class Kernel { chung_lu, norros_reittu, grg };

Kernel parse_kernel(std::string_view name);
std::string_view to_string(Kernel kernel);

/// min(x, 1), 1 - e^-x and x / (1 + x) respectively.
double kernel_probability(Kernel kernel, double x);

/// Each unordered pair {u, v} is an edge independently with probability
/// kernel(w_u w_v / M). Runs in expected O(n log n + m): nodes are visited in
/// order of decreasing weight and, for each u, candidate partners are reached
/// by geometric jumps under the current (nonincreasing) probability bound,
/// then thinned to the exact probability.
Graph gen_irg(const WeightSequence& w, Kernel kernel, Rng& rng);

/// Reference O(n^2) sampler of the same distribution.
Graph gen_irg_naive(const WeightSequence& w, Kernel kernel, Rng& rng);

/// Graph family for the scaling benchmark.
struct ModelSpec {
  /// "cm" or one of the kernel names.
  std::string model = "chung_lu";
  /// Power-law exponent; empty selects constant weights (finite variance).
  std::optional<double> beta;
  /// Constant weight, or the minimum weight of the power law.
  double weight = 10.0;
};

Graph generate(const ModelSpec& spec, std::size_t n, Rng& rng);

struct ScalingRecord {
  std::size_t n = 0;
  /// Stored adjacency entries, the same unit as edges_visited.
  std::size_t m = 0;
  std::size_t pairs = 0;
  double m_avg = 0.0;
  double alpha_pointwise = 0.0;
  double connected_fraction = 0.0;
};

struct ScalingResult {
  std::vector<ScalingRecord> records;
  /// Least-squares slope of log(m_avg) against log(m) across sizes.
  double alpha = 0.0;
};

/// For each size: generate a graph, sample `pairs` uniform ordered pairs,
/// run the bidirectional search on each (disconnected pairs included) and
/// average the adjacency entries scanned.
ScalingResult bench_scaling(const ModelSpec& spec, std::span<const std::size_t> sizes, std::size_t pairs,
                            std::uint64_t seed, unsigned workers = 1);

}  // namespace adabet
