#include "adabet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "adabet/engine.hpp"
#include "adabet/exact.hpp"
#include "adabet/graph.hpp"
#include "adabet/randgraph.hpp"

namespace adabet::cli {

namespace {

constexpr std::size_t kExactWarnNodes = 20000;

// Argument problems detected after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  bool directed = false;
  double lambda = 0.01;
  double delta = 0.1;
  double c = kDefaultC;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t vd_samples = kDefaultVdSamples;
  std::uint64_t check_batch = 0;
  std::string out;
  std::string model = "chung_lu";
  double beta = 0.0;
  bool has_beta = false;
  double weight = 10.0;
  std::size_t n = 1000;
  std::vector<std::size_t> sizes{4096, 8192, 16384, 32768, 65536};
  std::size_t pairs = 500;
};

std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

unsigned default_workers() {
  if (const char* env = std::getenv("KADABRA_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

CLI::Validator open_unit_interval() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          const double x = std::stod(s);
          if (x > 0.0 && x < 1.0) return {};
        } catch (const std::exception&) {
        }
        return "value " + s + " must lie in (0, 1)";
      },
      "(0,1)");
}

CLI::Validator positive_real() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          if (std::stod(s) > 0.0) return {};
        } catch (const std::exception&) {
        }
        return "value " + s + " must be positive";
      },
      "POSITIVE");
}

Graph load_input(const Options& opt) {
  auto loaded = load_edge_list(std::filesystem::path(opt.input), opt.directed);
  return std::move(loaded.graph);
}

// Writes to --out when given, otherwise to `out`.
template <typename Body>
void emit(const Options& opt, std::ostream& out, Body&& body) {
  if (opt.out.empty()) {
    body(out);
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw std::runtime_error("cannot open " + opt.out + " for writing");
  body(file);
  if (!file) throw std::runtime_error("write to " + opt.out + " failed");
}

RunConfig make_config(const Options& opt, Mode mode) {
  RunConfig cfg;
  cfg.mode = mode;
  cfg.lambda = opt.lambda;
  cfg.delta = opt.delta;
  cfg.k = opt.k;
  cfg.c = opt.c;
  cfg.seed = opt.seed;
  cfg.workers = opt.workers;
  cfg.vd_samples = opt.vd_samples;
  cfg.check_batch = opt.check_batch;
  return cfg;
}

void summarize(std::ostream& err, const Estimates& est, double seconds) {
  err << "tau=" << est.tau << " omega=" << est.omega << " vd=" << est.vd
      << " stopped_early=" << (est.stopped_early ? "true" : "false") << " time=" << fmt9(seconds) << "s\n";
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_approx(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Graph graph = load_input(opt);
  const auto est = run_absolute(graph, make_config(opt, Mode::absolute));
  emit(opt, out, [&](std::ostream& os) {
    os << "node\tbtilde\tlower\tupper\n";
    for (const NodeId v : order_by_estimate(est.btilde)) {
      os << graph.label(v) << '\t' << fmt9(est.btilde[v]) << '\t' << fmt9(est.lower[v]) << '\t'
         << fmt9(est.upper[v]) << '\n';
    }
  });
  summarize(err, est, elapsed_since(start));
  return kExitOk;
}

int cmd_topk(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Graph graph = load_input(opt);
  if (opt.k >= graph.num_nodes()) {
    throw UsageError("--k must be smaller than the node count (" + std::to_string(graph.num_nodes()) + ")");
  }
  const auto [est, report] = run_topk(graph, make_config(opt, Mode::topk));
  emit(opt, out, [&](std::ostream& os) {
    os << "node\tbtilde\tlower\tupper\tclass\trank_lo\trank_hi\n";
    for (const NodeId v : order_by_estimate(est.btilde)) {
      os << graph.label(v) << '\t' << fmt9(est.btilde[v]) << '\t' << fmt9(est.lower[v]) << '\t'
         << fmt9(est.upper[v]) << '\t' << to_string(report.classes[v]) << '\t' << report.rank_lo[v] << '\t'
         << report.rank_hi[v] << '\n';
    }
  });
  summarize(err, est, elapsed_since(start));
  err << "candidates=" << report.candidates.size() << " k=" << report.k << '\n';
  return kExitOk;
}

int cmd_exact(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Graph graph = load_input(opt);
  if (graph.num_nodes() > kExactWarnNodes) {
    err << "warning: exact computation on " << graph.num_nodes() << " nodes takes O(nm) time\n";
  }
  const auto scores = brandes(graph, opt.workers);
  emit(opt, out, [&](std::ostream& os) {
    os << "node\tbetweenness\n";
    for (const NodeId v : order_by_estimate(scores)) {
      os << graph.label(v) << '\t' << fmt9(scores[v]) << '\n';
    }
  });
  err << "n=" << graph.num_nodes() << " m=" << graph.num_edges() << " time=" << fmt9(elapsed_since(start))
      << "s\n";
  return kExitOk;
}

ModelSpec model_spec(const Options& opt) {
  ModelSpec spec;
  spec.model = opt.model;
  if (opt.has_beta) spec.beta = opt.beta;
  spec.weight = opt.weight;
  if (spec.model != "cm") {
    try {
      parse_kernel(spec.model);
    } catch (const std::invalid_argument&) {
      throw UsageError("--model: unknown model '" + opt.model + "' (cm, chung_lu, norros_reittu, grg)");
    }
  }
  if (opt.has_beta && !(opt.beta > 2.0)) throw UsageError("--beta must exceed 2");
  if (opt.has_beta && !(opt.weight >= 1.0)) throw UsageError("--weight (minimum weight) must be at least 1");
  return spec;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const ModelSpec spec = model_spec(opt);
  if (opt.pairs == 0) throw UsageError("--pairs must be positive");
  for (std::size_t i = 1; i < opt.sizes.size(); ++i) {
    if (opt.sizes[i] <= opt.sizes[i - 1]) throw UsageError("--sizes must be increasing");
  }
  if (opt.sizes.empty() || opt.sizes.front() < 2) throw UsageError("--sizes must be at least 2");
  const auto result = bench_scaling(spec, opt.sizes, opt.pairs, opt.seed, opt.workers);
  emit(opt, out, [&](std::ostream& os) {
    os << "n\tm\tpairs\tm_avg\talpha_pointwise\n";
    for (const auto& rec : result.records) {
      os << rec.n << '\t' << rec.m << '\t' << rec.pairs << '\t' << fmt9(rec.m_avg) << '\t'
         << fmt9(rec.alpha_pointwise) << '\n';
    }
    os << "# alpha_fit\t" << fmt9(result.alpha) << '\n';
  });
  err << "alpha_fit=" << fmt9(result.alpha) << " time=" << fmt9(elapsed_since(start)) << "s\n";
  return kExitOk;
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const ModelSpec spec = model_spec(opt);
  if (opt.n < 2) throw UsageError("--n must be at least 2");
  Rng rng = make_rng(opt.seed, Stream::generator);
  const Graph graph = generate(spec, opt.n, rng);
  emit(opt, out, [&](std::ostream& os) {
    os << "# model=" << opt.model << " n=" << opt.n;
    if (opt.has_beta) os << " beta=" << fmt9(opt.beta);
    os << " weight=" << fmt9(opt.weight) << " seed=" << opt.seed << '\n';
    graph.write_edge_list(os);
  });
  err << "n=" << graph.num_nodes() << " m=" << graph.num_edges() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.workers = default_workers();

  CLI::App app{"Adaptive betweenness centrality approximation"};
  app.require_subcommand(1);

  const auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Edge list file")->required();
    cmd->add_flag("--directed", opt.directed, "Treat arcs as directed");
    cmd->add_option("--out", opt.out, "Write the table here instead of stdout");
    cmd->add_option("--workers", opt.workers, "Worker threads (default: KADABRA_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_sampling = [&](CLI::App* cmd) {
    add_graph_input(cmd);
    cmd->add_option("--lambda", opt.lambda, "Absolute error target")->check(open_unit_interval());
    cmd->add_option("--delta", opt.delta, "Failure probability")->check(open_unit_interval());
    cmd->add_option("--c", opt.c, "Constant of the sample cap")->check(positive_real());
    cmd->add_option("--seed", opt.seed, "Random seed");
    cmd->add_option("--vd-samples", opt.vd_samples, "BFS sources for the vertex-diameter estimate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--check-batch", opt.check_batch, "Samples between stopping tests (0: omega/1000)");
  };
  const auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", opt.model, "cm, chung_lu, norros_reittu or grg");
    cmd->add_option("--beta", opt.beta, "Power-law exponent (omit for constant weights)");
    cmd->add_option("--weight", opt.weight, "Constant weight, or minimum power-law weight")
        ->check(positive_real());
    cmd->add_option("--seed", opt.seed, "Random seed");
    cmd->add_option("--out", opt.out, "Write output here instead of stdout");
  };

  auto* approx = app.add_subcommand("approx", "Approximate every node within an absolute error");
  add_sampling(approx);
  auto* topk = app.add_subcommand("topk", "Rank the k most central nodes");
  add_sampling(topk);
  topk->add_option("--k", opt.k, "Rank cutoff")->required()->check(CLI::PositiveNumber);
  auto* exact = app.add_subcommand("exact", "Exact betweenness (Brandes)");
  add_graph_input(exact);
  auto* bench = app.add_subcommand("bench", "Edges scanned per sampled path on random graphs");
  add_model(bench);
  bench->add_option("--sizes", opt.sizes, "Comma-separated increasing node counts")->delimiter(',');
  bench->add_option("--pairs", opt.pairs, "Pairs sampled per size");
  bench->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* gen = app.add_subcommand("gen", "Generate a random graph as an edge list");
  add_model(gen);
  gen->add_option("--n", opt.n, "Node count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (auto* cmd : {bench, gen}) {
    if (cmd->parsed() && cmd->count("--beta") > 0) opt.has_beta = true;
  }

  try {
    if (approx->parsed()) return cmd_approx(opt, out, err);
    if (topk->parsed()) return cmd_topk(opt, out, err);
    if (exact->parsed()) return cmd_exact(opt, out, err);
    if (bench->parsed()) return cmd_bench(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace adabet::cli
