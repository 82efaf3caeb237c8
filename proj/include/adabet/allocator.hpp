#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adabet/graph.hpp"

namespace adabet {

inline constexpr double kDefaultEpsilon = 1e-3;

/// Per-node failure probabilities for the lower and upper confidence bounds.
struct DeltaBudgets {
  std::vector<double> delta_l;
  std::vector<double> delta_u;
  /// Warm-up estimate count(v) / alpha.
  std::vector<double> preliminary_btilde;
  std::uint64_t alpha = 0;
  /// The constant C with delta(v) = exp(-C / c(v)) + eps * delta / (2n).
  double budget_constant = 0.0;
  /// Set when the bisection could not bracket C and the budget was split
  /// uniformly instead.
  bool uniform_fallback = false;
};

/// Warm-up sample count: max(1, floor(omega / 100)).
std::uint64_t warmup_sample_count(std::uint64_t omega);

/// Warm-up estimates count(v) / alpha from `alpha` fresh samples.
std::vector<double> warmup_estimates(const Graph& graph, std::uint64_t alpha, std::uint64_t seed,
                                     unsigned workers);

/// Sum over positive c of exp(-C / c); zero entries contribute nothing.
double budget_sum(std::span<const double> c_values, double budget_constant);

/// Smallest C (to bisection precision) with budget_sum(c, C) <= target.
/// Returns false in `bracketed` when no finite C satisfies it.
double solve_budget_constant(std::span<const double> c_values, double target, bool& bracketed);

/// Budget allocation from given warm-up estimates. Targets lambda_l and
/// lambda_u are the interval half-widths each node should reach; nodes with
/// a large expected half-width receive a larger share of delta / 2.
/// Postcondition: sum(delta_l + delta_u) <= delta / 2.
DeltaBudgets allocate_deltas(std::span<const double> btilde, std::span<const double> lambda_l,
                             std::span<const double> lambda_u, std::uint64_t omega, double delta,
                             double epsilon = kDefaultEpsilon);

/// Warm-up sampling followed by allocate_deltas.
DeltaBudgets compute_deltas(const Graph& graph, std::span<const double> lambda_l,
                            std::span<const double> lambda_u, std::uint64_t omega, double delta,
                            double epsilon, std::uint64_t seed, unsigned workers = 1);

}  // namespace adabet
