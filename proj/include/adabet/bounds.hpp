#pragma once

#include <cstddef>
#include <cstdint>

#include "adabet/graph.hpp"
#include "adabet/random.hpp"

namespace adabet {

inline constexpr double kDefaultC = 0.5;
inline constexpr std::size_t kDefaultVdSamples = 20;

/// Statistical configuration of one run.
struct ErrorParams {
  double lambda = 0.01;
  double delta = 0.1;
  double c = kDefaultC;
  std::uint64_t omega = 1;
  std::size_t vd = 2;
};

/// Upper-bound style estimate of the vertex diameter (nodes on a longest
/// shortest path). BFS from `num_samples` random sources; undirected graphs
/// use 2 * max eccentricity + 1, directed graphs add the largest forward and
/// backward eccentricities plus one.
std::size_t estimate_vertex_diameter(const Graph& graph, std::size_t num_samples, Rng& rng);

/// Sample cap after which every estimate is within lambda with probability
/// 1 - delta/2:
///   ceil( c / lambda^2 * (floor(log2(vd - 2)) + 1 + ln(2 / delta)) )
/// The log2 term is clamped to 0 for vd <= 3.
std::uint64_t compute_omega(double lambda, double delta, double c, std::size_t vd);

ErrorParams make_error_params(double lambda, double delta, double c, std::size_t vd);

/// Lower half-width: b(v) >= btilde - f except with probability delta_l, at
/// any stopping time tau <= omega.
double f_lower(double btilde, double delta_l, double omega, double tau);

/// Upper half-width: b(v) <= btilde + g except with probability delta_u.
double g_upper(double btilde, double delta_u, double omega, double tau);

}  // namespace adabet
