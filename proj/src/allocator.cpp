#include "adabet/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adabet/sampling_pool.hpp"

namespace adabet {

namespace {

constexpr int kMaxBisectionSteps = 100;
constexpr int kMaxDoublings = 1100;

}  // namespace

std::uint64_t warmup_sample_count(std::uint64_t omega) {
  return std::max<std::uint64_t>(1, omega / 100);
}

std::vector<double> warmup_estimates(const Graph& graph, std::uint64_t alpha, std::uint64_t seed,
                                     unsigned workers) {
  if (alpha == 0) throw std::invalid_argument("warm-up needs at least one sample");
  std::vector<std::uint64_t> counts(graph.num_nodes(), 0);
  SamplingPool pool(graph, seed, Stream::warmup, workers);
  pool.draw(alpha, counts);
  std::vector<double> btilde(counts.size());
  for (std::size_t v = 0; v < counts.size(); ++v) {
    btilde[v] = static_cast<double>(counts[v]) / static_cast<double>(alpha);
  }
  return btilde;
}

double budget_sum(std::span<const double> c_values, double budget_constant) {
  double sum = 0.0;
  for (const double c : c_values) {
    if (c > 0.0) sum += std::exp(-budget_constant / c);
  }
  return sum;
}

double solve_budget_constant(std::span<const double> c_values, double target, bool& bracketed) {
  bracketed = false;
  if (budget_sum(c_values, 0.0) <= target) return 0.0;

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (budget_sum(c_values, hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxDoublings || !std::isfinite(hi)) return hi;
  }
  bracketed = true;
  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (budget_sum(c_values, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

DeltaBudgets allocate_deltas(std::span<const double> btilde, std::span<const double> lambda_l,
                             std::span<const double> lambda_u, std::uint64_t omega, double delta,
                             double epsilon) {
  const std::size_t n = btilde.size();
  if (n == 0) throw std::invalid_argument("budget allocation needs at least one node");
  if (lambda_l.size() != n || lambda_u.size() != n) {
    throw std::invalid_argument("target arrays must have one entry per node");
  }
  if (!(delta > 0.0) || delta >= 1.0) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(epsilon > 0.0) || epsilon >= 0.5) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  if (omega == 0) throw std::invalid_argument("omega must be positive");

  // c_L(v) and c_U(v) interleaved; exp(-C / c) is the budget of that side.
  std::vector<double> c_values(2 * n);
  const double w = static_cast<double>(omega);
  for (std::size_t v = 0; v < n; ++v) {
    if (!(lambda_l[v] > 0.0) || !(lambda_u[v] > 0.0)) {
      throw std::invalid_argument("per-node targets must be positive");
    }
    c_values[2 * v] = 2.0 * btilde[v] * w / (lambda_l[v] * lambda_l[v]);
    c_values[2 * v + 1] = 2.0 * btilde[v] * w / (lambda_u[v] * lambda_u[v]);
  }

  DeltaBudgets out;
  out.preliminary_btilde.assign(btilde.begin(), btilde.end());
  out.delta_l.resize(n);
  out.delta_u.resize(n);

  const double target = delta / 2.0 - epsilon * delta;
  const double floor_share = epsilon * delta / (2.0 * static_cast<double>(n));
  const bool any_positive = std::any_of(c_values.begin(), c_values.end(), [](double c) { return c > 0.0; });

  if (!any_positive) {
    // Every exponential term vanishes; only the epsilon floor remains.
    std::fill(out.delta_l.begin(), out.delta_l.end(), floor_share);
    std::fill(out.delta_u.begin(), out.delta_u.end(), floor_share);
    return out;
  }

  bool bracketed = false;
  const double budget_constant = solve_budget_constant(c_values, target, bracketed);
  if (!bracketed) {
    const double share = floor_share + target / (2.0 * static_cast<double>(n));
    std::fill(out.delta_l.begin(), out.delta_l.end(), share);
    std::fill(out.delta_u.begin(), out.delta_u.end(), share);
    out.uniform_fallback = true;
    return out;
  }

  out.budget_constant = budget_constant;
  for (std::size_t v = 0; v < n; ++v) {
    const double cl = c_values[2 * v];
    const double cu = c_values[2 * v + 1];
    out.delta_l[v] = (cl > 0.0 ? std::exp(-budget_constant / cl) : 0.0) + floor_share;
    out.delta_u[v] = (cu > 0.0 ? std::exp(-budget_constant / cu) : 0.0) + floor_share;
  }
  return out;
}

DeltaBudgets compute_deltas(const Graph& graph, std::span<const double> lambda_l,
                            std::span<const double> lambda_u, std::uint64_t omega, double delta,
                            double epsilon, std::uint64_t seed, unsigned workers) {
  const std::uint64_t alpha = warmup_sample_count(omega);
  const auto btilde = warmup_estimates(graph, alpha, seed, workers);
  auto budgets = allocate_deltas(btilde, lambda_l, lambda_u, omega, delta, epsilon);
  budgets.alpha = alpha;
  return budgets;
}

}  // namespace adabet
