#include "adabet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "adabet/sampling_pool.hpp"

namespace adabet {

namespace {

struct Plan {
  std::size_t vd = 0;
  std::uint64_t omega = 0;
  std::uint64_t batch = 1;
};

Plan make_plan(const Graph& graph, const RunConfig& cfg) {
  validate(cfg, graph.num_nodes());
  Plan plan;
  Rng rng = make_rng(cfg.seed, Stream::vertex_diameter);
  plan.vd = estimate_vertex_diameter(graph, cfg.vd_samples, rng);
  plan.omega = compute_omega(cfg.lambda, cfg.delta, cfg.c, plan.vd);
  plan.batch = cfg.check_batch > 0 ? cfg.check_batch : std::max<std::uint64_t>(1, plan.omega / 1000);
  return plan;
}

template <typename StopTest>
Estimates adaptive_loop(const Graph& graph, const RunConfig& cfg, const Plan& plan, DeltaBudgets budgets,
                        StopTest&& should_stop) {
  const std::size_t n = graph.num_nodes();
  Estimates est;
  est.counts.assign(n, 0);
  est.omega = plan.omega;
  est.vd = plan.vd;
  est.check_batch = plan.batch;

  SamplingPool pool(graph, cfg.seed, Stream::main, cfg.workers);
  std::uint64_t tau = 0;
  while (tau < plan.omega) {
    if (tau > 0 && should_stop(make_snapshot(est.counts, tau, plan.omega, budgets))) break;
    const std::uint64_t step = std::min(plan.batch, plan.omega - tau);
    pool.draw(step, est.counts);
    tau += step;
  }

  est.tau = tau;
  est.stopped_early = tau < plan.omega;
  est.edges_visited = pool.edges_visited();
  est.internal_nodes_total = pool.internal_nodes_total();

  const auto snap = make_snapshot(est.counts, tau, plan.omega, budgets);
  est.btilde = snap.btilde;
  est.lower.resize(n);
  est.upper.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    double f = snap.f[v];
    double g = snap.g[v];
    if (!est.stopped_early) {
      // After omega samples every estimate is within lambda as well.
      f = std::min(f, cfg.lambda);
      g = std::min(g, cfg.lambda);
    }
    est.lower[v] = est.btilde[v] - f;
    est.upper[v] = est.btilde[v] + g;
  }
  est.budgets = std::move(budgets);
  return est;
}

}  // namespace

void validate(const RunConfig& cfg, std::size_t num_nodes) {
  if (num_nodes < 2) throw std::invalid_argument("graph must have at least two nodes");
  if (!(cfg.lambda > 0.0) || cfg.lambda >= 1.0) throw std::invalid_argument("lambda must lie in (0, 1)");
  if (!(cfg.delta > 0.0) || cfg.delta >= 1.0) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(cfg.c > 0.0) || !std::isfinite(cfg.c)) throw std::invalid_argument("c must be positive");
  if (!(cfg.epsilon > 0.0) || cfg.epsilon >= 0.5) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  if (cfg.workers == 0) throw std::invalid_argument("workers must be at least 1");
  if (cfg.vd_samples == 0) throw std::invalid_argument("vd_samples must be at least 1");
  if (cfg.mode == Mode::topk && (cfg.k == 0 || cfg.k >= num_nodes)) {
    throw std::invalid_argument("k must satisfy 1 <= k < n");
  }
}

std::string_view to_string(RankClass c) {
  switch (c) {
    case RankClass::exact_rank:
      return "exact_rank";
    case RankClass::not_in_topk:
      return "not_in_topk";
    case RankClass::approx_within_lambda:
      return "approx_within_lambda";
  }
  return "unknown";
}

std::vector<NodeId> order_by_estimate(std::span<const double> btilde) {
  std::vector<NodeId> order(btilde.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return btilde[a] > btilde[b]; });
  return order;
}

std::vector<TargetPair> assign_topk_lambdas(std::span<const double> sorted_btilde, std::size_t k,
                                            double lambda) {
  const std::size_t n = sorted_btilde.size();
  if (k == 0 || k >= n) throw std::invalid_argument("k must satisfy 1 <= k < n");
  const auto& b = sorted_btilde;

  std::vector<TargetPair> targets(n, {1.0, 1.0});
  std::vector<bool> pinned(n, false);

  for (std::size_t i = 0; i < k; ++i) {
    targets[i].upper = i == 0 ? 1.0 : (b[i - 1] - b[i]) / 2.0;
    targets[i].lower = (b[i] - b[i + 1]) / 2.0;
  }
  // Neighbours too close to tell apart are only asked for lambda accuracy.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if ((b[i] - b[i + 1]) / 2.0 < lambda) {
      targets[i] = targets[i + 1] = {lambda, lambda};
      pinned[i] = pinned[i + 1] = true;
    }
  }
  for (std::size_t i = k; i < n; ++i) {
    if (pinned[i]) continue;
    targets[i].lower = 1.0;
    targets[i].upper = b[k - 1] - targets[k - 1].lower - b[i];
  }
  for (auto& t : targets) {
    t.lower = std::clamp(t.lower, lambda, 1.0);
    t.upper = std::clamp(t.upper, lambda, 1.0);
  }
  return targets;
}

IntervalSnapshot make_snapshot(std::span<const std::uint64_t> counts, std::uint64_t tau,
                               std::uint64_t omega, const DeltaBudgets& budgets) {
  const std::size_t n = counts.size();
  IntervalSnapshot snap;
  snap.tau = tau;
  snap.btilde.resize(n);
  snap.f.resize(n);
  snap.g.resize(n);
  const double t = static_cast<double>(tau);
  const double w = static_cast<double>(omega);
  for (std::size_t v = 0; v < n; ++v) {
    const double b = static_cast<double>(counts[v]) / t;
    snap.btilde[v] = b;
    snap.f[v] = f_lower(b, budgets.delta_l[v], w, t);
    snap.g[v] = g_upper(b, budgets.delta_u[v], w, t);
  }
  return snap;
}

bool absolute_should_stop(const IntervalSnapshot& snap, double lambda) {
  for (std::size_t v = 0; v < snap.btilde.size(); ++v) {
    if (snap.f[v] > lambda || snap.g[v] > lambda) return false;
  }
  return true;
}

bool topk_should_stop(const IntervalSnapshot& snap, std::size_t k, double lambda) {
  const std::size_t n = snap.btilde.size();
  const auto order = order_by_estimate(snap.btilde);
  const auto within = [&](NodeId v) { return snap.f[v] <= lambda && snap.g[v] <= lambda; };

  for (std::size_t i = 0; i < k; ++i) {
    const NodeId v = order[i];
    if (within(v)) continue;
    if (i > 0 && snap.lower(order[i - 1]) < snap.upper(v)) return false;
    if (snap.lower(v) < snap.upper(order[i + 1])) return false;
  }
  const NodeId kth = order[k - 1];
  for (std::size_t i = k; i < n; ++i) {
    const NodeId v = order[i];
    if (!within(v) && snap.lower(kth) < snap.upper(v)) return false;
  }

  // Every node must also land in one of the three reported classes.
  std::vector<double> lower(n);
  std::vector<double> upper(n);
  for (NodeId v = 0; v < n; ++v) {
    lower[v] = snap.lower(v);
    upper[v] = snap.upper(v);
  }
  const auto report = classify_topk(snap.btilde, lower, upper, k);
  for (NodeId v = 0; v < n; ++v) {
    if (report.classes[v] == RankClass::approx_within_lambda && !within(v)) return false;
  }
  return true;
}

TopkReport classify_topk(std::span<const double> btilde, std::span<const double> lower,
                         std::span<const double> upper, std::size_t k) {
  const std::size_t n = btilde.size();
  std::vector<double> lowers(lower.begin(), lower.end());
  std::vector<double> uppers(upper.begin(), upper.end());
  std::sort(lowers.begin(), lowers.end());
  std::sort(uppers.begin(), uppers.end());

  TopkReport report;
  report.k = k;
  report.classes.resize(n);
  report.rank_lo.resize(n);
  report.rank_hi.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto surely_above =
        static_cast<std::size_t>(lowers.end() - std::upper_bound(lowers.begin(), lowers.end(), upper[v]));
    const auto surely_below =
        static_cast<std::size_t>(std::lower_bound(uppers.begin(), uppers.end(), lower[v]) - uppers.begin());
    report.rank_lo[v] = 1 + surely_above;
    report.rank_hi[v] = n - surely_below;
    if (report.rank_lo[v] > k) {
      report.classes[v] = RankClass::not_in_topk;
    } else if (report.rank_lo[v] == report.rank_hi[v]) {
      report.classes[v] = RankClass::exact_rank;
    } else {
      report.classes[v] = RankClass::approx_within_lambda;
    }
  }
  for (const NodeId v : order_by_estimate(btilde)) {
    if (report.classes[v] != RankClass::not_in_topk) report.candidates.push_back(v);
  }
  return report;
}

Estimates run_absolute(const Graph& graph, const RunConfig& cfg) {
  const Plan plan = make_plan(graph, cfg);
  const std::size_t n = graph.num_nodes();
  const std::vector<double> targets(n, cfg.lambda);
  auto budgets = compute_deltas(graph, targets, targets, plan.omega, cfg.delta, cfg.epsilon, cfg.seed,
                                cfg.workers);
  const double lambda = cfg.lambda;
  return adaptive_loop(graph, cfg, plan, std::move(budgets),
                       [lambda](const IntervalSnapshot& snap) { return absolute_should_stop(snap, lambda); });
}

std::pair<Estimates, TopkReport> run_topk(const Graph& graph, const RunConfig& cfg) {
  RunConfig topk_cfg = cfg;
  topk_cfg.mode = Mode::topk;
  const Plan plan = make_plan(graph, topk_cfg);
  const std::size_t n = graph.num_nodes();

  // One warm-up feeds both the target assignment and the budget allocation.
  const std::uint64_t alpha = warmup_sample_count(plan.omega);
  const auto warm = warmup_estimates(graph, alpha, cfg.seed, cfg.workers);
  const auto order = order_by_estimate(warm);
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = warm[order[i]];
  const auto targets = assign_topk_lambdas(sorted, cfg.k, cfg.lambda);
  std::vector<double> lambda_l(n);
  std::vector<double> lambda_u(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda_l[order[i]] = targets[i].lower;
    lambda_u[order[i]] = targets[i].upper;
  }
  auto budgets = allocate_deltas(warm, lambda_l, lambda_u, plan.omega, cfg.delta, cfg.epsilon);
  budgets.alpha = alpha;

  const std::size_t k = cfg.k;
  const double lambda = cfg.lambda;
  auto est = adaptive_loop(graph, topk_cfg, plan, std::move(budgets), [k, lambda](const IntervalSnapshot& snap) {
    return topk_should_stop(snap, k, lambda);
  });
  auto report = classify_topk(est.btilde, est.lower, est.upper, k);
  return {std::move(est), std::move(report)};
}

}  // namespace adabet
