#include "adabet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace adabet {

namespace {

// Largest BFS depth from `root` over out- or in-arcs.
std::uint32_t eccentricity(const Graph& graph, NodeId root, bool forward,
                           std::vector<std::uint32_t>& dist, std::vector<NodeId>& queue) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[root] = 0;
  queue.push_back(root);
  std::uint32_t ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    ecc = dist[v];
    const auto nbrs = forward ? graph.out_neighbors(v) : graph.in_neighbors(v);
    for (const NodeId w : nbrs) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return ecc;
}

void check_tau(double omega, double tau) {
  if (!(tau >= 1.0) || tau > omega) {
    throw std::invalid_argument("tau must satisfy 1 <= tau <= omega");
  }
}

// log(1/delta) * (a + sqrt(a^2 + 2 btilde omega / log(1/delta))) / tau.
// For a < 0 the sum is evaluated as x / (sqrt(a^2 + x) - a) to avoid
// cancellation; both forms are algebraically identical.
double half_width(double btilde, double delta, double omega, double tau, double a) {
  if (delta <= 0.0) return std::numeric_limits<double>::infinity();
  if (delta >= 1.0) return 0.0;
  const double log_inv = -std::log(delta);
  const double x = 2.0 * btilde * omega / log_inv;
  const double root = std::sqrt(a * a + x);
  const double bracket = a >= 0.0 ? a + root : x / (root - a);
  return log_inv * bracket / tau;
}

}  // namespace

std::size_t estimate_vertex_diameter(const Graph& graph, std::size_t num_samples, Rng& rng) {
  const auto n = graph.num_nodes();
  if (n == 0) throw std::invalid_argument("vertex diameter of an empty graph");
  if (num_samples == 0) throw std::invalid_argument("vertex diameter needs at least one sample");

  std::vector<std::uint32_t> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uint32_t max_forward = 0;
  std::uint32_t max_backward = 0;
  for (std::size_t i = 0; i < num_samples; ++i) {
    const auto root = static_cast<NodeId>(pick(rng));
    max_forward = std::max(max_forward, eccentricity(graph, root, true, dist, queue));
    if (graph.directed()) {
      max_backward = std::max(max_backward, eccentricity(graph, root, false, dist, queue));
    }
  }
  if (graph.directed()) return std::size_t{max_forward} + max_backward + 1;
  return 2 * std::size_t{max_forward} + 1;
}

std::uint64_t compute_omega(double lambda, double delta, double c, std::size_t vd) {
  if (!(lambda > 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("lambda must lie in (0, 1), got " + std::to_string(lambda));
  }
  if (!(delta > 0.0) || delta >= 1.0) {
    throw std::invalid_argument("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("c must be positive, got " + std::to_string(c));
  }
  double log_term = 0.0;
  if (vd > 3) log_term = std::floor(std::log2(static_cast<double>(vd - 2)));
  const double value = c / (lambda * lambda) * (log_term + 1.0 + std::log(2.0 / delta));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(value)));
}

ErrorParams make_error_params(double lambda, double delta, double c, std::size_t vd) {
  return {lambda, delta, c, compute_omega(lambda, delta, c, vd), vd};
}

double f_lower(double btilde, double delta_l, double omega, double tau) {
  check_tau(omega, tau);
  return half_width(btilde, delta_l, omega, tau, 1.0 / 3.0 - omega / tau);
}

double g_upper(double btilde, double delta_u, double omega, double tau) {
  check_tau(omega, tau);
  return half_width(btilde, delta_u, omega, tau, 1.0 / 3.0 + omega / tau);
}

}  // namespace adabet
