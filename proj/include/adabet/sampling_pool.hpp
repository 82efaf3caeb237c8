#pragma once

#include <atomic>
#include <barrier>
#include <cstdint>
#include <exception>
#include <memory>
#include <span>
#include <thread>
#include <vector>

#include "adabet/graph.hpp"
#include "adabet/random.hpp"
#include "adabet/sampler.hpp"

namespace adabet {

/// Workers that draw random shortest paths in batches.
///
/// Worker i owns a PathSampler and the generator make_rng(seed, stream, i).
/// A batch of `count` samples is split deterministically (worker i draws
/// count / W samples, plus one if i < count % W), so the merged tallies depend
/// only on (seed, stream, workers). With one worker everything runs on the
/// calling thread.
class SamplingPool {
 public:
  SamplingPool(const Graph& graph, std::uint64_t seed, Stream stream, unsigned workers);
  ~SamplingPool();

  SamplingPool(const SamplingPool&) = delete;
  SamplingPool& operator=(const SamplingPool&) = delete;

  /// Draws `count` samples and adds one to `tallies[v]` for every internal
  /// node v of every sampled path.
  void draw(std::uint64_t count, std::span<std::uint64_t> tallies);

  unsigned workers() const noexcept { return static_cast<unsigned>(slots_.size()); }
  std::uint64_t samples_drawn() const noexcept { return samples_drawn_; }
  std::uint64_t edges_visited() const noexcept { return edges_visited_; }
  std::uint64_t connected_samples() const noexcept { return connected_; }
  /// Sum over samples of the number of internal nodes.
  std::uint64_t internal_nodes_total() const noexcept { return internal_total_; }

 private:
  struct Slot {
    Slot(const Graph& graph, Rng rng_) : sampler(graph), rng(std::move(rng_)) {}
    PathSampler sampler;
    Rng rng;
    PathSample sample;
    std::uint64_t quota = 0;
    std::vector<NodeId> touched;
    std::uint64_t edges = 0;
    std::uint64_t connected = 0;
    std::exception_ptr error;
  };

  void run_slot(Slot& slot);
  void worker_loop(std::size_t index);

  std::vector<std::unique_ptr<Slot>> slots_;
  std::vector<std::jthread> threads_;
  std::barrier<> start_;
  std::barrier<> done_;
  std::atomic<bool> stopping_{false};
  std::uint64_t samples_drawn_ = 0;
  std::uint64_t edges_visited_ = 0;
  std::uint64_t connected_ = 0;
  std::uint64_t internal_total_ = 0;
};

}  // namespace adabet
