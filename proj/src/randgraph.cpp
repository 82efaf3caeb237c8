#include "adabet/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "adabet/sampling_pool.hpp"

namespace adabet {

WeightSequence make_weights(std::vector<double> weights) {
  WeightSequence w;
  for (const double x : weights) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("weights must be positive and finite");
  }
  w.total = std::accumulate(weights.begin(), weights.end(), 0.0);
  w.weights = std::move(weights);
  return w;
}

WeightSequence constant_weights(std::size_t n, double weight) {
  return make_weights(std::vector<double>(n, weight));
}

WeightSequence powerlaw_weights(std::size_t n, double beta, double w_min, Rng& rng) {
  if (!(beta > 2.0)) throw std::invalid_argument("power-law exponent must exceed 2");
  if (!(w_min >= 1.0)) throw std::invalid_argument("minimum weight must be at least 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(n);
  const double exponent = -1.0 / (beta - 1.0);
  for (auto& x : weights) x = w_min * std::pow(1.0 - unit(rng), exponent);
  return make_weights(std::move(weights));
}

Graph gen_configuration_model(const WeightSequence& w, Rng& rng, IngestStats* stats) {
  const std::size_t n = w.weights.size();
  if (n == 0) throw std::invalid_argument("configuration model needs at least one node");
  std::vector<NodeId> stubs;
  for (std::size_t v = 0; v < n; ++v) {
    // nearbyint rounds half to even under the default rounding mode.
    const auto count = static_cast<std::size_t>(std::nearbyint(w.weights[v]));
    stubs.insert(stubs.end(), count, static_cast<NodeId>(v));
  }
  if (stubs.size() % 2 == 1) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    stubs.push_back(static_cast<NodeId>(pick(rng)));
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<Arc> arcs;
  arcs.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) arcs.emplace_back(stubs[i], stubs[i + 1]);
  return Graph::from_arcs(n, arcs, false, {}, stats);
}

Kernel parse_kernel(std::string_view name) {
  if (name == "chung_lu") return Kernel::chung_lu;
  if (name == "norros_reittu") return Kernel::norros_reittu;
  if (name == "grg") return Kernel::grg;
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

std::string_view to_string(Kernel kernel) {
  switch (kernel) {
    case Kernel::chung_lu:
      return "chung_lu";
    case Kernel::norros_reittu:
      return "norros_reittu";
    case Kernel::grg:
      return "grg";
  }
  return "unknown";
}

double kernel_probability(Kernel kernel, double x) {
  switch (kernel) {
    case Kernel::chung_lu:
      return std::min(x, 1.0);
    case Kernel::norros_reittu:
      return -std::expm1(-x);
    case Kernel::grg:
      return x / (1.0 + x);
  }
  throw std::invalid_argument("unknown kernel");
}

Graph gen_irg(const WeightSequence& w, Kernel kernel, Rng& rng) {
  const std::size_t n = w.weights.size();
  if (n < 2) throw std::invalid_argument("random graph needs at least two nodes");
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return w.weights[a] > w.weights[b]; });

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double wi = w.weights[order[i]];
    std::size_t j = i + 1;
    double bound = kernel_probability(kernel, wi * w.weights[order[j]] / w.total);
    while (j < n && bound > 0.0) {
      if (bound < 1.0) {
        const double r = 1.0 - unit(rng);  // (0, 1]
        const double skip = std::floor(std::log(r) / std::log1p(-bound));
        if (skip >= static_cast<double>(n - j)) break;
        j += static_cast<std::size_t>(skip);
      }
      const double p = kernel_probability(kernel, wi * w.weights[order[j]] / w.total);
      if (unit(rng) * bound < p) arcs.emplace_back(order[i], order[j]);
      bound = p;
      ++j;
    }
  }
  return Graph::from_arcs(n, arcs, false);
}

Graph gen_irg_naive(const WeightSequence& w, Kernel kernel, Rng& rng) {
  const std::size_t n = w.weights.size();
  if (n < 2) throw std::invalid_argument("random graph needs at least two nodes");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < kernel_probability(kernel, w.weights[u] * w.weights[v] / w.total)) {
        arcs.emplace_back(u, v);
      }
    }
  }
  return Graph::from_arcs(n, arcs, false);
}

Graph generate(const ModelSpec& spec, std::size_t n, Rng& rng) {
  const WeightSequence w =
      spec.beta ? powerlaw_weights(n, *spec.beta, spec.weight, rng) : constant_weights(n, spec.weight);
  if (spec.model == "cm") return gen_configuration_model(w, rng);
  return gen_irg(w, parse_kernel(spec.model), rng);
}

ScalingResult bench_scaling(const ModelSpec& spec, std::span<const std::size_t> sizes, std::size_t pairs,
                            std::uint64_t seed, unsigned workers) {
  if (spec.model != "cm") parse_kernel(spec.model);
  if (pairs == 0) throw std::invalid_argument("pairs per size must be positive");
  if (sizes.empty()) throw std::invalid_argument("at least one size is required");

  ScalingResult result;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be increasing");
    Rng gen_rng = make_rng(seed, Stream::generator, i);
    const Graph graph = generate(spec, sizes[i], gen_rng);

    SamplingPool pool(graph, seed + i, Stream::bench, workers);
    std::vector<std::uint64_t> tallies(graph.num_nodes(), 0);
    pool.draw(pairs, tallies);

    ScalingRecord rec;
    rec.n = graph.num_nodes();
    rec.m = graph.num_arcs();
    rec.pairs = pairs;
    rec.m_avg = static_cast<double>(pool.edges_visited()) / static_cast<double>(pairs);
    rec.alpha_pointwise = rec.m > 1 && rec.m_avg > 0.0 ? std::log(rec.m_avg) / std::log(static_cast<double>(rec.m)) : 0.0;
    rec.connected_fraction = static_cast<double>(pool.connected_samples()) / static_cast<double>(pairs);
    result.records.push_back(rec);
  }

  if (result.records.size() == 1) {
    result.alpha = result.records.front().alpha_pointwise;
    return result;
  }
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  const auto k = static_cast<double>(result.records.size());
  for (const auto& rec : result.records) {
    const double x = std::log(static_cast<double>(rec.m));
    const double y = std::log(rec.m_avg);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.alpha = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return result;
}

}  // namespace adabet
